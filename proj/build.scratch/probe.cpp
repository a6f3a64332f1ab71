#include <chrono>
#include <cstdio>
#include "sphlat/fourier_sphere.hpp"
using namespace sphlat;
using Clock = std::chrono::steady_clock;
static void probe(int r, double rho, FtMethod m, const char* tag) {
    auto t0 = Clock::now();
    auto ev = fourier_sphere_eval(r, rho, m, 1e-9);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    printf("%-8s r=%2d rho=%6.2f -> % .12e  abserr=%.1e bits=%d  %.1f ms\n", tag, r, rho,
           ev.value, ev.abs_err, ev.bits_used, ms);
    fflush(stdout);
}
int main() {
    probe(3, 1.0, FtMethod::bessel_formula, "GL");
    probe(3, 1.0, FtMethod::interval_quadrature, "Simpson");
    probe(2, 0.3827, FtMethod::bessel_formula, "GL");
    probe(2, 0.3827, FtMethod::interval_quadrature, "Simpson");
    probe(10, 1.0, FtMethod::bessel_formula, "GL");
    probe(10, 1.0, FtMethod::interval_quadrature, "Simpson");
    probe(30, 7.3, FtMethod::bessel_formula, "GL");
    probe(30, 7.3, FtMethod::interval_quadrature, "Simpson");
    probe(30, 50.0, FtMethod::bessel_formula, "GL");
    probe(30, 50.0, FtMethod::interval_quadrature, "Simpson");
    return 0;
}
