#pragma once

#include <map>
#include <optional>
#include <string>

#include "strato/modes.hpp"
#include "strato/norms.hpp"
#include "strato/ops.hpp"

namespace strato {

struct SolverConfig {
    double dt = 2e-3;
    double t_end = 0.5;
    int scheme = 4;  // integrating-factor RK order, 2 or 4
    double cfl_safety = 0.5;
    double snap_dt = 0.02;  // snapshot cadence (rounded to a step multiple)
    std::vector<NormSpec> norms = {NormSpec::L2()};
    bool nonlinear = true;
    bool record_snapshots = true;

    void validate() const {
        if (dt <= 0 || t_end < 0) throw std::invalid_argument("SolverConfig: dt > 0, t_end >= 0");
        if (scheme != 2 && scheme != 4) throw std::invalid_argument("SolverConfig: scheme 2 or 4");
    }
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Field4> snapshots;
    std::map<std::string, std::vector<double>> series;  // norm id -> values at times
    double blowup_integral = 0;  // int ||grad state||^2_{Hdot(1/2)} dtau
    bool aborted = false;
    std::string abort_reason;

    const std::vector<double>& series_for(const std::string& id) const {
        auto it = series.find(id);
        if (it == series.end()) throw std::out_of_range("no series: " + id);
        return it->second;
    }
};

// Initial state: U(0) = U0_S + U0_osc + (0,0,0,theta0_eps(x3)), plus the limit
// data the difference diagnostics compare against.
struct InitialData {
    Field4 U0_S;
    Field4 U0_osc;
    VerticalProfile theta0_eps;
    Field2 v0h_limit;
    VerticalProfile theta0_limit;

    static InitialData make(Field4 U0S, Field4 U0osc, VerticalProfile th0e, Field2 v0h,
                            VerticalProfile th0, double tol = 1e-10);
    Field4 combined() const;
};

// Exact 1D heat flow: theta_hat(t, xi3) = exp(-nu' xi3^2 t) theta_hat(0, xi3).
VerticalProfile solve_heat_1d(const VerticalProfile& theta0, double nu_prime, double t);

// pi0 = -sum_{i,j<=2} lap_h^{-1} di dj (v^i v^j); zero on xi_h = 0 modes.
ScalarField compute_pressure_pi0(const Field2& vh);
// G~ = P (d1 pi0, d2 pi0, 0, 0); divergence-free with omega(G~) = 0.
Field4 compute_G_tilde(const Field2& vh);

// Horizontal Navier-Stokes limit flow with full 3D diffusion.
Trajectory solve_limit_ns(const Field2& v0h, double nu, const SolverConfig& cfg);

// Strongly stratified Boussinesq flow; stiff linear part applied exactly,
// transport integrated explicitly.
Trajectory solve_full_stratif(const InitialData& data, const PhysParams& p,
                              const SolverConfig& cfg);

// Linear filtering wave driven by G~ (from a co-advanced limit flow when
// limit_v0h is given); `truncated` applies P_{r,R} to data and source.
Trajectory solve_wave(const Field4& U0osc, const std::optional<Field2>& limit_v0h,
                      const PhysParams& p, const SolverConfig& cfg, bool truncated = false,
                      const std::optional<TruncationSpec>& annulus = std::nullopt);

// Stokes-type linear system: same propagator, untruncated, data E0.
Trajectory solve_stokes_type(const Field4& E0, const std::optional<Field2>& limit_v0h,
                             const PhysParams& p, const SolverConfig& cfg);

}  // namespace strato
