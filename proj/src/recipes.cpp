#include "strato/recipes.hpp"

#include <cmath>

#include "strato/fft.hpp"

namespace strato {

std::uint64_t GaussianStream::splitmix() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double GaussianStream::uniform() {
    return (splitmix() >> 11) * 0x1.0p-53 + 0x1.0p-54;  // in (0,1)
}

double GaussianStream::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u = uniform(), v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    have_spare_ = true;
    spare_ = r * std::sin(2 * M_PI * v);
    return r * std::cos(2 * M_PI * v);
}

ScalarField random_band_scalar(const GridSpec& g, double kmin, double kmax, GaussianStream& rng) {
    std::vector<double> noise(g.size());
    for (double& v : noise) v = rng.next();
    ScalarField f = transform_forward_real<1>(g, {noise});
    double k0 = 2 * M_PI / std::max({g.L1, g.L2, g.L3});  // unit lattice spacing scale
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        double kn = g.xi(i1, i2, i3).norm() / k0;
        if (kn < kmin || kn > kmax) {
            f.at(0, idx) = 0;
            return;
        }
        f.at(0, idx) *= std::exp(-kn * kn / 72.0);  // gaussian roll-off, scale 6
    });
    return f;
}

namespace {

Field4 stream_to_stratified(const ScalarField& phi) {
    const GridSpec& g = phi.grid();
    Field4 out(g);
    const cplx I(0, 1);
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        out.at(0, idx) = -I * xi.y * phi.at(0, idx);
        out.at(1, idx) = I * xi.x * phi.at(0, idx);
    });
    return out;
}

VerticalProfile random_profile(int n, double L, int kmin, int kmax, double amp,
                               GaussianStream& rng) {
    VerticalProfile p(n, L);
    for (int k = kmin; k <= kmax && k < n / 2; ++k) {
        cplx a(rng.next(), rng.next());
        p.at(k) = amp * a;
        p.at(n - k) = std::conj(amp * a);
    }
    return p;
}

}  // namespace

InitialData generate_initial_data(const DataRecipe& recipe, const GridSpec& g, double eps) {
    recipe.validate();
    if (eps <= 0) throw std::invalid_argument("generate_initial_data: eps must be positive");
    GaussianStream rng(recipe.seed);

    // stratified part from a random stream function, normalized in Hdot(1/2)
    ScalarField phi = random_band_scalar(g, 1, recipe.kmax_strat, rng);
    Field4 U0S = stream_to_stratified(phi);
    apply_dealias_mask(U0S);
    double ns = norm(U0S, NormSpec::hdot(0.5));
    if (ns == 0) throw std::runtime_error("generate_initial_data: empty stratified draw");
    U0S *= 1.0 / ns;

    // limit data: U0S^h plus an eps^alpha0 stratified mismatch
    Field2 v0h = horizontal_components(U0S);
    GaussianStream rng_mismatch(recipe.seed + 101);
    if (recipe.vh_mismatch_amp > 0) {
        ScalarField phi2 = random_band_scalar(g, 1, recipe.kmax_strat, rng_mismatch);
        Field4 pert = stream_to_stratified(phi2);
        apply_dealias_mask(pert);
        double np = norm(pert, NormSpec::L2());
        if (np > 0) {
            pert *= recipe.vh_mismatch_amp * std::pow(eps, recipe.alpha0) / np;
            Field2 ph = horizontal_components(pert);
            ph *= -1.0;
            v0h -= ph;  // v0h = U0S^h + scaled perturbation
        }
    }

    // oscillating part: envelope-modulated noise, projected and de-stratified
    Field4 U0osc(g);
    if (!recipe.well_prepared && recipe.c0 > 0) {
        GaussianStream rng_osc(recipe.seed + 202);
        double sh = recipe.env_sigma_h * g.L1 / (2 * M_PI);
        double sv = recipe.env_sigma_v * g.L3 / (2 * M_PI);
        std::vector<std::vector<double>> comps(4, std::vector<double>(g.size()));
        for (int c = 0; c < 4; ++c) {
            for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
                Vec3 x = g.point(i1, i2, i3);
                double dx = x.x - g.L1 / 2, dy = x.y - g.L2 / 2, dz = x.z - g.L3 / 2;
                double env =
                    std::exp(-(dx * dx + dy * dy) / (2 * sh * sh) - dz * dz / (2 * sv * sv));
                comps[c][idx] = env * rng_osc.next();
            });
        }
        Field4 raw = transform_forward_real<4>(g, comps);
        double k0 = 2 * M_PI / std::max({g.L1, g.L2, g.L3});
        for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
            Vec3 xi = g.xi(i1, i2, i3);
            bool kill = xi.norm() / k0 > recipe.kmax_osc || xi.hnorm() == 0;
            if (kill)
                for (int c = 0; c < 4; ++c) raw.at(c, idx) = 0;
        });
        raw = leray_project(raw);
        raw -= stratified_part(raw);
        apply_dealias_mask(raw);
        double target = recipe.c0 * std::pow(eps, -recipe.gamma_effective());
        double have = norm(raw, NormSpec::hdot(0.5 + recipe.delta));
        if (have <= 0)
            throw std::runtime_error(
                "generate_initial_data: oscillating norm target unreachable at this resolution");
        raw *= target / have;
        U0osc = std::move(raw);
    }

    // vertical profiles
    GaussianStream rng_theta(recipe.seed + 303);
    VerticalProfile theta0 = random_profile(g.n3, g.L3, 1, 3, recipe.theta_amp, rng_theta);
    VerticalProfile theta0_eps = theta0;
    if (!recipe.well_prepared && recipe.theta_pert_amp > 0) {
        GaussianStream rng_pert(recipe.seed + 404);
        VerticalProfile pert = random_profile(g.n3, g.L3, 1, 2,
                                              recipe.theta_pert_amp *
                                                  std::pow(eps, recipe.theta_rate),
                                              rng_pert);
        for (int i = 0; i < theta0_eps.n(); ++i) theta0_eps.at(i) += pert.at(i);
    }

    return InitialData::make(std::move(U0S), std::move(U0osc), std::move(theta0_eps),
                             std::move(v0h), std::move(theta0));
}

double K_of_q(double q) {
    if (!(q > 2 && q < 6)) throw std::invalid_argument("K_of_q: q in (2,6)");
    double a = 6.0 / q - 1.0, b = 1.0 - 2.0 / q;
    double m = std::min(a, b);
    return m * m / a;
}

TheoreticalExponents theoretical_exponents(const DataRecipe& recipe, double weak_q) {
    TheoreticalExponents out;
    out.weak_q = weak_q;
    double gamma = recipe.gamma_effective();
    out.general_rate =
        std::min({recipe.alpha0, recipe.delta * (1 - recipe.eta) / 3108.0, 1.0 / 9324.0});
    out.equal_visc_rate = std::min(recipe.alpha0, recipe.delta / 2.0 - gamma);
    double Kq = K_of_q(weak_q);
    out.weak_rate_general = Kq / 640.0;
    out.weak_rate_equal = Kq / 544.0;
    out.guaranteed = true;
    try {
        recipe.validate();
    } catch (const std::exception& e) {
        out.guaranteed = false;
        out.notes = std::string("no theoretical guarantee: ") + e.what();
    }
    if (gamma >= recipe.delta / 2) {
        out.guaranteed = false;
        out.notes += (out.notes.empty() ? "" : "; ");
        out.notes += "no theoretical guarantee: gamma >= delta/2";
    }
    return out;
}

}  // namespace strato
