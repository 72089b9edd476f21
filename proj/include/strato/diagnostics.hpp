#pragma once

#include "strato/solvers.hpp"

namespace strato {

// D_eps(t) = U_eps(t) - (v~^h(t), 0, theta~_eps(t,x3)); trajectories must share
// snapshot stamps. The returned trajectory holds the D snapshots, the requested
// norm series, the stratified-part series (P2_ prefix), and the blow-up monitor.
Trajectory compute_D_eps(const Trajectory& full, const Trajectory& limit,
                         const VerticalProfile& theta0_eps, double nu_prime,
                         const std::vector<NormSpec>& norms);

// delta_eps = D_eps - W (pointwise on shared stamps), with the same norm set.
Trajectory compute_delta_eps(const Trajectory& D_eps, const Trajectory& wave,
                             const std::vector<NormSpec>& norms);

// --- Boussinesq bridge -------------------------------------------------------
// Pointwise algebraic maps between (V, P) = (v, rho, P) solving the classical
// system and (U, Phi) = (v, theta, Phi) solving the stratified one, around the
// explicit stationary profile. The linear-in-x3 background is not periodic, so
// everything here works on raw point samples.

struct BoussPoint {
    std::array<double, 4> V{};  // (v1, v2, v3, rho)
    double P = 0;
};
struct StratPoint {
    std::array<double, 4> U{};  // (v1, v2, v3, theta)
    double Phi = 0;
};

// rho_bar(x3) = rho0 - x3/(eps^2 kappa^2); P_bar = P0 - kappa^2 rho0 x3 + x3^2/(2 eps^2)
BoussPoint stationary_solution(const PhysParams& p, double rho0, double P0, const Vec3& x);

StratPoint boussinesq_to_stratif(const BoussPoint& vp, const PhysParams& p, double rho0,
                                 double P0, const Vec3& x);
BoussPoint stratif_to_boussinesq(const StratPoint& up, const PhysParams& p, double rho0,
                                 double P0, const Vec3& x);

}  // namespace strato
