#pragma once

#include <complex>
#include <vector>

#include "strato/modes.hpp"

namespace strato {

// --- stationary-phase model integral -----------------------------------------
// I_{alpha,beta}^R(sigma) = int_0^{sqrt(R^2-alpha^2)} dx / (1 + sigma (f_alpha(x)-beta)^2),
// f_alpha(x) = alpha x / (alpha^2 + x^2)^{3/2}.
struct PhaseIntegralSpec {
    double alpha = 1;  // |xi_h|
    double beta = 0;   // x3
    double R = 10;
    double sigma = 0;  // |t - t'| / eps

    void validate() const {
        if (!(alpha > 0) || sigma < 0) throw std::invalid_argument("PhaseIntegralSpec: bad alpha/sigma");
        if (!(R > 2 * alpha / std::sqrt(3.0)))
            throw std::invalid_argument("PhaseIntegralSpec: need R > 2 alpha / sqrt(3)");
    }
};

double f_alpha(double x, double alpha);
double eval_I_alpha_beta(const PhaseIntegralSpec& spec);  // abs tol 1e-10

// sup over beta: 64-point grid on [0, 2 beta*] refined by golden section around
// the best point, seeded at the degenerate level beta* = f_alpha(alpha/sqrt 2).
double sup_beta_I(double alpha, double R, double sigma);
// lower-bound witness: I evaluated at beta* itself
double witness_I(double alpha, double R, double sigma);

// --- vertical oscillatory kernel ----------------------------------------------
// I(xi_h, x3) = (2 pi)^-1 (1 - chi(|xi_h|/r)) *
//   int_{|xi3| <= sqrt((2R)^2-|xi_h|^2)} chi(|xi|/2R)
//     exp(-(nu+nu')/4 (t+t') |xi|^2) exp(i (t-t')/eps (x3 xi3 + |xi_h|/|xi|))
//     exp(-i (t-t') eps D(eps,xi)) dxi3
// Panel quadrature with >= 8 panels per oscillation period, doubled until the
// relative change is below 1e-8.
std::complex<double> eval_I(double xi_h, double x3, double t, double tp, const PhysParams& p,
                            double r, double R);

// sup over x3 (grid + golden refinement seeded at the degenerate point)
double sup_x3_eval_I(double xi_h, double t, double tp, const PhysParams& p, double r, double R);

// --- rate fitting --------------------------------------------------------------
struct RateFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    int points = 0;
};
RateFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

// --- Strichartz scaling measurement ---------------------------------------------
struct StrichartzSpec {
    double p = 4;        // time exponent
    double r = 6;        // spatial exponent (isotropic) or vertical exponent m (anisotropic)
    double theta = 1;    // interpolation parameter
    bool anisotropic = false;
    double T = 1.0;
    int samples_per_decade = 60;

    double theoretical_exponent(const PhysParams& params) const {
        double frac = 1.0 - 2.0 / r;
        if (!params.equal_viscosities()) return frac / 8.0;
        return anisotropic ? theta / 8.0 * frac : theta / 4.0 * frac;
    }
};

struct StrichartzResult {
    RateFit fit;
    double theoretical = 0;
    std::vector<double> eps;
    std::vector<double> norms;
    bool pass = false;  // slope >= theoretical - 0.05
};

// Propagates oscillating-only data through the linear semigroup for each eps and
// fits log ||W||_{L^p_t X} against log eps.
StrichartzResult measure_strichartz_scaling(const Field4& f0_osc, const PhysParams& base,
                                            const std::vector<double>& eps_list,
                                            const StrichartzSpec& spec);

// --- heat flow on the annulus ----------------------------------------------------
struct HeatAnnulusReport {
    double fitted_C = 0;  // sup over samples of ||e^{tL}u||_p e^{t r^2/2} / ((R^3/r^4)||u||_p)
    int checked = 0;
    bool pass = false;
};
HeatAnnulusReport check_heat_annulus(double r, double R, double p_exp,
                                     const std::vector<Field4>& fields,
                                     const std::vector<double>& t_grid);

}  // namespace strato
