#pragma once

#include <complex>
#include <functional>
#include <vector>

// Laplace-Beltrami spectral machinery: the Dirichlet eigenbasis
// Psi_n(q) = sqrt(2/pi) sin(2n asin(sqrt(q))) with eigenvalues -n^2,
// generalized Fourier expansions, heat/wave evolution, and the Green's
// function in series and closed form.

namespace bspace::spectral {

// Orthonormal eigenfunction of the Laplace-Beltrami operator, n >= 1.
double psi(int n, double q);

// Same eigenfunction in the theta chart: sqrt(2/pi) sin(n theta).
double psi_theta(int n, double theta);

// Numerical Laplace-Beltrami of f at q, evaluated as d^2/dtheta^2 of the
// chart pullback by central differences with step h.
double laplace_beltrami(const std::function<double(double)>& f, double q,
                        double h = 1e-4);

struct Mode {
    int n;
    double coeff;
};

// Finite expansion in the Psi_n basis. Mode indices strictly increasing.
struct SpectralExpansion {
    std::vector<Mode> modes;

    double coeff_norm2() const; // sqrt(sum A_n^2)
};

struct ComplexMode {
    int n;
    std::complex<double> coeff;
};

struct ComplexExpansion {
    std::vector<ComplexMode> modes;

    double coeff_norm2() const;
};

// Generalized Fourier coefficients A_n = <f, Psi_n>_w for n = 1..n_max.
SpectralExpansion expand(const std::function<double(double)>& f, int n_max,
                         double tol = 1e-12);

double evaluate(const SpectralExpansion& e, double q);
std::complex<double> evaluate(const ComplexExpansion& e, double q);

// Which exponent the heat solution uses: Consistent applies exp(-n^2 t),
// the law forced by the spectrum; Paper applies exp(-n t) verbatim.
enum class HeatDecayLaw { Consistent, Paper };

SpectralExpansion heat_evolve(const SpectralExpansion& e0, double t,
                              HeatDecayLaw law = HeatDecayLaw::Consistent);

// Wave evolution: coefficient n picks up exp(-i n t); moduli preserved.
ComplexExpansion wave_evolve(const SpectralExpansion& e0, double t);
ComplexExpansion wave_evolve(const ComplexExpansion& e0, double t);

// Partial sum sum_{n<=N} Psi_n(q) Psi_n(q') / n^2; tail is O(1/N).
double greens_series(double q, double qprime, int n_terms = 10000);

// Closed form of the same series.
double greens_closed(double q, double qprime);

} // namespace bspace::spectral
