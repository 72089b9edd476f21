#include "strato/diagnostics.hpp"

#include <cmath>

namespace strato {

namespace {

void check_aligned(const Trajectory& a, const Trajectory& b) {
    if (a.times.size() != b.times.size())
        throw std::invalid_argument("trajectories have different snapshot counts");
    for (std::size_t i = 0; i < a.times.size(); ++i)
        if (std::abs(a.times[i] - b.times[i]) > 1e-12 * std::max(1.0, a.times[i]))
            throw std::invalid_argument("trajectory time stamps are not aligned");
    if (a.snapshots.size() != a.times.size() || b.snapshots.size() != b.times.size())
        throw std::invalid_argument("trajectories must retain snapshots for diagnostics");
}

}  // namespace

Trajectory compute_D_eps(const Trajectory& full, const Trajectory& limit,
                         const VerticalProfile& theta0_eps, double nu_prime,
                         const std::vector<NormSpec>& norms) {
    check_aligned(full, limit);
    Trajectory out;
    out.times = full.times;
    for (std::size_t i = 0; i < full.times.size(); ++i) {
        double t = full.times[i];
        Field4 D = full.snapshots[i];
        D -= limit.snapshots[i];  // limit snapshots carry (v~^h, 0, 0)
        VerticalProfile th = solve_heat_1d(theta0_eps, nu_prime, t);
        for (auto& c : th.raw()) c = -c;
        add_vertical_profile(D, 3, th);
        for (const NormSpec& ns : norms) out.series[ns.id()].push_back(norm(D, ns));
        Field4 P2D = stratified_part(D);
        for (const NormSpec& ns : norms) out.series["P2_" + ns.id()].push_back(norm(P2D, ns));
        if (i + 1 < full.times.size())
            out.blowup_integral +=
                (full.times[i + 1] - t) * std::pow(norm(D, NormSpec::hdot(1.5)), 2);
        out.snapshots.push_back(std::move(D));
    }
    return out;
}

Trajectory compute_delta_eps(const Trajectory& D_eps, const Trajectory& wave,
                             const std::vector<NormSpec>& norms) {
    check_aligned(D_eps, wave);
    Trajectory out;
    out.times = D_eps.times;
    for (std::size_t i = 0; i < D_eps.times.size(); ++i) {
        Field4 d = D_eps.snapshots[i];
        d -= wave.snapshots[i];
        for (const NormSpec& ns : norms) out.series[ns.id()].push_back(norm(d, ns));
        out.snapshots.push_back(std::move(d));
    }
    return out;
}

BoussPoint stationary_solution(const PhysParams& p, double rho0, double P0, const Vec3& x) {
    if (p.kappa <= 0) throw std::invalid_argument("stationary_solution: kappa must be positive");
    double e2k2 = p.eps * p.eps * p.kappa * p.kappa;
    BoussPoint out;
    out.V = {0, 0, 0, rho0 - x.z / e2k2};
    out.P = P0 - p.kappa * p.kappa * rho0 * x.z + x.z * x.z / (2 * p.eps * p.eps);
    return out;
}

StratPoint boussinesq_to_stratif(const BoussPoint& vp, const PhysParams& p, double rho0,
                                 double P0, const Vec3& x) {
    if (p.kappa <= 0) throw std::invalid_argument("boussinesq_to_stratif: kappa must be positive");
    BoussPoint bar = stationary_solution(p, rho0, P0, x);
    StratPoint out;
    out.U[0] = vp.V[0];
    out.U[1] = vp.V[1];
    out.U[2] = vp.V[2];
    out.U[3] = (vp.V[3] - bar.V[3]) * (p.eps * p.kappa * p.kappa);
    out.Phi = p.eps * (vp.P - bar.P);
    return out;
}

BoussPoint stratif_to_boussinesq(const StratPoint& up, const PhysParams& p, double rho0,
                                 double P0, const Vec3& x) {
    if (p.kappa <= 0) throw std::invalid_argument("stratif_to_boussinesq: kappa must be positive");
    BoussPoint bar = stationary_solution(p, rho0, P0, x);
    BoussPoint out;
    out.V[0] = up.U[0];
    out.V[1] = up.U[1];
    out.V[2] = up.U[2];
    out.V[3] = bar.V[3] + up.U[3] / (p.eps * p.kappa * p.kappa);
    out.P = bar.P + up.Phi / p.eps;
    return out;
}

}  // namespace strato
