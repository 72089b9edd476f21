#pragma once

#include <cstdint>
#include <string>

#include "strato/solvers.hpp"

namespace strato {

// Seeded recipe for the sweep initial data. The oscillating part is a random
// band-limited field modulated by a localized envelope (dispersive sup-norm
// decay is not observable for statistically homogeneous data on a torus),
// then Leray-projected, de-stratified, and rescaled so that
// ||U0_osc||_{Hdot(1/2+delta)} = c0 eps^{-gamma}.
struct DataRecipe {
    double delta = 0.125;  // regularity increment, in (0, 1]
    double eta = 0.5;      // in (0, 1/2], with eta*delta <= 1/3
    double gamma = -1;     // < 0 selects the Th1 value delta*(1-eta)/2784
    double alpha0 = 1.0;   // stratified mismatch rate ||U0S^h - v0^h|| ~ eps^alpha0
    double vh_mismatch_amp = 0.0;  // 0: limit data matches U0S^h exactly
    double c0 = 0.25;      // oscillating amplitude
    double theta_amp = 0.3;
    double theta_pert_amp = 0.5;  // |theta0_eps - theta0| = amp * eps^theta_rate
    double theta_rate = 1.0;
    std::uint64_t seed = 1;
    bool well_prepared = false;
    double env_sigma_h = 0.55, env_sigma_v = 0.35;  // envelope widths (for L = 2 pi)
    double kmax_osc = 8, kmax_strat = 5;            // spectral bands of the draws

    double gamma_effective() const { return gamma >= 0 ? gamma : delta * (1 - eta) / 2784.0; }
    void validate() const {
        if (!(delta > 0 && delta <= 1)) throw std::invalid_argument("recipe: delta in (0,1]");
        if (!(eta > 0 && eta <= 0.5)) throw std::invalid_argument("recipe: eta in (0,1/2]");
        if (eta * delta > 1.0 / 3.0 + 1e-15)
            throw std::invalid_argument("recipe: need eta*delta <= 1/3");
        if (c0 < 0 || theta_amp < 0) throw std::invalid_argument("recipe: negative amplitude");
    }
};

InitialData generate_initial_data(const DataRecipe& recipe, const GridSpec& g, double eps);

// Convergence-rate references from the theorems. These are asymptotic lower
// bounds with unknown constants; the study uses them as reported references,
// not as gates.
struct TheoreticalExponents {
    double general_rate = 0;     // min(alpha0, delta(1-eta)/3108, 1/9324)
    double equal_visc_rate = 0;  // min(alpha0, delta/2 - gamma), k -> 1 limit
    double weak_rate_general = 0;  // K(q)/640
    double weak_rate_equal = 0;    // K(q)/544
    double global_rate = 3.0 / 16.0;
    double weak_q = 4;             // L^q index used for K(q)
    bool guaranteed = true;
    std::string notes;
};
double K_of_q(double q);  // min(6/q-1, 1-2/q)^2 / (6/q-1), for q in (2,6)
TheoreticalExponents theoretical_exponents(const DataRecipe& recipe, double weak_q = 4);

// Deterministic gaussian stream (Box-Muller over mt19937_64); the recipes and
// the bit-reproducibility guarantee depend on this exact sequence.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : state_(seed) {}
    double next();

  private:
    double uniform();
    std::uint64_t splitmix();
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0;
};

// Band-limited random real field: physical white noise, spectrally masked to
// kmin <= |k| <= kmax with a gaussian roll-off.
ScalarField random_band_scalar(const GridSpec& g, double kmin, double kmax, GaussianStream& rng);

}  // namespace strato
