#include "strato/solvers.hpp"

#include <cmath>

#include "strato/fft.hpp"

namespace strato {

namespace {

bool has_nan(const Field4& f) {
    for (const cplx& v : f.raw())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return true;
    return false;
}

double grad_hdot_half_sq(const Field4& f) {
    // ||grad f||^2_{Hdot(1/2)} = ||f||^2_{Hdot(3/2)}
    double n = norm(f, NormSpec::hdot(1.5));
    return n * n;
}

void record_norms(Trajectory& traj, const Field4& state, const std::vector<NormSpec>& norms,
                  double t) {
    traj.times.push_back(t);
    for (const NormSpec& ns : norms) traj.series[ns.id()].push_back(norm(state, ns));
}

// mode-wise application of cached step matrices
void apply_step(const std::vector<Matrix4cd>& E, Field4& u) {
    std::size_t n = u.grid().size();
    for (std::size_t i = 0; i < n; ++i) {
        Vector4cd x;
        for (int c = 0; c < 4; ++c) x(c) = u.at(c, i);
        Vector4cd y = E[i] * x;
        for (int c = 0; c < 4; ++c) u.at(c, i) = y(c);
    }
}

Field4 applied_step(const std::vector<Matrix4cd>& E, const Field4& u) {
    Field4 out = u;
    apply_step(E, out);
    return out;
}

int snapshot_stride(const SolverConfig& cfg) {
    return std::max(1, int(std::llround(cfg.snap_dt / cfg.dt)));
}

}  // namespace

InitialData InitialData::make(Field4 U0S, Field4 U0osc, VerticalProfile th0e, Field2 v0h,
                              VerticalProfile th0, double tol) {
    if (divergence_defect(U0S) > tol || divergence_defect(U0osc) > tol)
        throw std::invalid_argument("InitialData: velocity parts must be divergence-free");
    Field4 s_of_osc = stratified_part(U0osc);
    Field4 osc_of_s = U0S - stratified_part(U0S);
    double a = norm(s_of_osc, NormSpec::L2());
    double b = norm(osc_of_s, NormSpec::L2());
    double scale = std::max(norm(U0osc, NormSpec::L2()), norm(U0S, NormSpec::L2()));
    if (scale > 0 && (a > tol * scale || b > tol * scale))
        throw std::invalid_argument("InitialData: U0_S must be stratified and U0_osc oscillating");
    InitialData d{std::move(U0S), std::move(U0osc), std::move(th0e), std::move(v0h),
                  std::move(th0)};
    return d;
}

Field4 InitialData::combined() const {
    Field4 u = U0_S + U0_osc;
    add_vertical_profile(u, 3, theta0_eps);
    return u;
}

VerticalProfile solve_heat_1d(const VerticalProfile& theta0, double nu_prime, double t) {
    VerticalProfile out = theta0;
    for (int i = 0; i < out.n(); ++i) {
        double x = out.xi3(i);
        out.at(i) *= std::exp(-nu_prime * x * x * t);
    }
    return out;
}

ScalarField compute_pressure_pi0(const Field2& vh) {
    const GridSpec& g = vh.grid();
    auto v = transform_inverse_real(vh);
    std::vector<std::vector<double>> prods(3, std::vector<double>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        prods[0][i] = v[0][i] * v[0][i];
        prods[1][i] = v[0][i] * v[1][i];
        prods[2][i] = v[1][i] * v[1][i];
    }
    ScalarField t11 = transform_forward_real<1>(g, {prods[0]});
    ScalarField t12 = transform_forward_real<1>(g, {prods[1]});
    ScalarField t22 = transform_forward_real<1>(g, {prods[2]});
    ScalarField pi(g);
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        double h2 = xi.hnorm2();
        if (h2 == 0) return;
        cplx s = xi.x * xi.x * t11.at(0, idx) + 2.0 * xi.x * xi.y * t12.at(0, idx) +
                 xi.y * xi.y * t22.at(0, idx);
        pi.at(0, idx) = -s / h2;
    });
    apply_dealias_mask(pi);
    return pi;
}

Field4 compute_G_tilde(const Field2& vh) {
    const GridSpec& g = vh.grid();
    ScalarField pi = compute_pressure_pi0(vh);
    Field4 grad(g);
    const cplx I(0, 1);
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        grad.at(0, idx) = I * xi.x * pi.at(0, idx);
        grad.at(1, idx) = I * xi.y * pi.at(0, idx);
    });
    return leray_project(grad);
}

Trajectory solve_limit_ns(const Field2& v0h, double nu, const SolverConfig& cfg) {
    cfg.validate();
    if (divergence_defect_h(v0h) > 1e-10)
        throw std::invalid_argument("solve_limit_ns: div_h v0 != 0");
    const GridSpec& g = v0h.grid();
    Field2 v = v0h;
    apply_dealias_mask(v);

    auto NL = [&](const Field2& u) -> Field2 {
        Field2 out = leray_project_h(advect_h(u, u));
        out *= -1.0;
        return out;
    };
    auto heat = [&](const Field2& u, double t) { return heat_flow(u, nu, t); };

    Trajectory traj;
    int stride = snapshot_stride(cfg);
    int nsteps = int(std::llround(cfg.t_end / cfg.dt));
    double dt = cfg.dt;
    double dx = std::min({g.L1 / g.n1, g.L2 / g.n2, g.L3 / g.n3});

    auto record = [&](double t, const Field2& u) {
        Field4 emb = embed_horizontal(u);
        record_norms(traj, emb, cfg.norms, t);
        if (cfg.record_snapshots) traj.snapshots.push_back(emb);
    };
    record(0.0, v);
    for (int n = 0; n < nsteps; ++n) {
        double vmax = max_velocity_amplitude(embed_horizontal(v));
        if (cfg.nonlinear && vmax > 0 && dt > cfg.cfl_safety * dx / vmax) {
            traj.aborted = true;
            traj.abort_reason = "CFL violation: dt > safety*dx/max|v|";
            return traj;
        }
        traj.blowup_integral += dt * grad_hdot_half_sq(embed_horizontal(v));
        if (cfg.scheme == 2) {
            Field2 k1 = cfg.nonlinear ? NL(v) : Field2(g);
            Field2 u1 = heat(v + dt * k1, dt);
            Field2 k2 = cfg.nonlinear ? NL(u1) : Field2(g);
            v = heat(v, dt) + 0.5 * dt * (heat(k1, dt) + k2);
        } else {
            Field2 k1 = cfg.nonlinear ? NL(v) : Field2(g);
            Field2 Ev = heat(v, dt);
            Field2 E2v = heat(v, dt / 2);
            Field2 ua = heat(v + 0.5 * dt * k1, dt / 2);
            Field2 k2 = cfg.nonlinear ? NL(ua) : Field2(g);
            Field2 ub = E2v + 0.5 * dt * k2;
            Field2 k3 = cfg.nonlinear ? NL(ub) : Field2(g);
            Field2 uc = Ev + dt * heat(k3, dt / 2);
            Field2 k4 = cfg.nonlinear ? NL(uc) : Field2(g);
            v = Ev + (dt / 6.0) * (heat(k1, dt) + 2.0 * heat(k2 + k3, dt / 2) + k4);
        }
        if ((n + 1) % stride == 0 || n + 1 == nsteps) record((n + 1) * dt, v);
    }
    return traj;
}

namespace {

// Shared integrating-factor stepper for the penalized 4-component systems.
// rhs(t, state) is the explicit part (transport and/or source).
template <class RHS>
Trajectory run_if_solver(Field4 u, const PhysParams& p, const SolverConfig& cfg, RHS&& rhs,
                         bool cfl_on_state) {
    cfg.validate();
    const GridSpec& g = u.grid();
    auto table = mode_table(g, p);
    auto E = table->step_matrices(cfg.dt);
    auto E2 = table->step_matrices(cfg.dt / 2);

    Trajectory traj;
    int stride = snapshot_stride(cfg);
    int nsteps = int(std::llround(cfg.t_end / cfg.dt));
    double dt = cfg.dt;
    double dx = std::min({g.L1 / g.n1, g.L2 / g.n2, g.L3 / g.n3});

    auto record = [&](double t, const Field4& s) {
        record_norms(traj, s, cfg.norms, t);
        if (cfg.record_snapshots) traj.snapshots.push_back(s);
    };
    record(0.0, u);
    for (int n = 0; n < nsteps; ++n) {
        double t = n * dt;
        if (cfl_on_state) {
            double vmax = max_velocity_amplitude(u);
            if (vmax > 0 && dt > cfg.cfl_safety * dx / vmax) {
                traj.aborted = true;
                traj.abort_reason = "CFL violation: dt > safety*dx/max|v|";
                return traj;
            }
        }
        traj.blowup_integral += dt * grad_hdot_half_sq(u);
        if (cfg.scheme == 2) {
            Field4 k1 = rhs(t, u);
            Field4 ua = applied_step(E, u + dt * k1);
            Field4 k2 = rhs(t + dt, ua);
            u = applied_step(E, u) + 0.5 * dt * (applied_step(E, k1) + k2);
        } else {
            Field4 k1 = rhs(t, u);
            Field4 Eu = applied_step(E, u);
            Field4 E2u = applied_step(E2, u);
            Field4 ua = applied_step(E2, u + 0.5 * dt * k1);
            Field4 k2 = rhs(t + dt / 2, ua);
            Field4 ub = E2u + 0.5 * dt * k2;
            Field4 k3 = rhs(t + dt / 2, ub);
            Field4 uc = Eu + dt * applied_step(E2, k3);
            Field4 k4 = rhs(t + dt, uc);
            u = Eu + (dt / 6.0) * (applied_step(E, k1) + 2.0 * applied_step(E2, k2 + k3) + k4);
        }
        if (has_nan(u)) {
            traj.aborted = true;
            traj.abort_reason = "numerical blow-up: NaN in state";
            return traj;
        }
        if ((n + 1) % stride == 0 || n + 1 == nsteps) record((n + 1) * dt, u);
    }
    return traj;
}

// Advances the limit flow in half steps and serves G~ at stage times.
class GtildeProvider {
  public:
    GtildeProvider(const Field2& v0h, double nu, double dt, int scheme)
        : v_(v0h), nu_(nu), half_dt_(dt / 2), scheme_(scheme), t_(0), cache_t_(-1) {
        apply_dealias_mask(v_);
    }

    // stage times are requested non-decreasingly, on the half-step lattice
    Field4 at(double t) {
        while (t_ + 0.5 * half_dt_ < t) advance_half();
        if (cache_t_ != t_) {
            cache_ = compute_G_tilde(v_);
            cache_t_ = t_;
        }
        return cache_;
    }

  private:
    void advance_half() {
        double dt = half_dt_;
        auto NL = [&](const Field2& u) {
            Field2 out = leray_project_h(advect_h(u, u));
            out *= -1.0;
            return out;
        };
        auto heat = [&](const Field2& u, double s) { return heat_flow(u, nu_, s); };
        if (scheme_ == 2) {
            Field2 k1 = NL(v_);
            Field2 u1 = heat(v_ + dt * k1, dt);
            Field2 k2 = NL(u1);
            v_ = heat(v_, dt) + 0.5 * dt * (heat(k1, dt) + k2);
        } else {
            Field2 k1 = NL(v_);
            Field2 Ev = heat(v_, dt);
            Field2 ua = heat(v_ + 0.5 * dt * k1, dt / 2);
            Field2 k2 = NL(ua);
            Field2 ub = heat(v_, dt / 2) + 0.5 * dt * k2;
            Field2 k3 = NL(ub);
            Field2 uc = Ev + dt * heat(k3, dt / 2);
            Field2 k4 = NL(uc);
            v_ = Ev + (dt / 6.0) * (heat(k1, dt) + 2.0 * heat(k2 + k3, dt / 2) + k4);
        }
        t_ += dt;
    }

    Field2 v_;
    double nu_;
    double half_dt_;
    int scheme_;
    double t_;
    Field4 cache_;
    double cache_t_;
};

}  // namespace

Trajectory solve_full_stratif(const InitialData& data, const PhysParams& p,
                              const SolverConfig& cfg) {
    Field4 u = data.combined();
    apply_dealias_mask(u);
    auto rhs = [&](double, const Field4& s) -> Field4 {
        if (!cfg.nonlinear) return Field4(s.grid());
        Field4 out = leray_project(advect(s, s));
        out *= -1.0;
        return out;
    };
    return run_if_solver(std::move(u), p, cfg, rhs, cfg.nonlinear);
}

Trajectory solve_wave(const Field4& U0osc, const std::optional<Field2>& limit_v0h,
                      const PhysParams& p, const SolverConfig& cfg, bool truncated,
                      const std::optional<TruncationSpec>& annulus) {
    if (truncated && !annulus)
        throw std::invalid_argument("solve_wave: truncated run needs a TruncationSpec");
    double scale = norm(U0osc, NormSpec::L2());
    if (scale > 0 && norm(stratified_part(U0osc), NormSpec::L2()) > 1e-10 * scale)
        throw std::invalid_argument("solve_wave: P2 of the initial data must vanish");

    Field4 w0 = truncated ? truncate(U0osc, *annulus) : U0osc;
    std::shared_ptr<GtildeProvider> src;
    if (limit_v0h) src = std::make_shared<GtildeProvider>(*limit_v0h, p.nu, cfg.dt, cfg.scheme);
    bool trunc = truncated;
    std::optional<TruncationSpec> ann = annulus;
    auto rhs = [src, trunc, ann](double t, const Field4& s) -> Field4 {
        if (!src) return Field4(s.grid());
        Field4 G = src->at(t);
        if (trunc) return truncate(G, *ann);
        return G;
    };
    return run_if_solver(std::move(w0), p, cfg, rhs, false);
}

Trajectory solve_stokes_type(const Field4& E0, const std::optional<Field2>& limit_v0h,
                             const PhysParams& p, const SolverConfig& cfg) {
    Field4 e0 = E0;
    std::shared_ptr<GtildeProvider> src;
    if (limit_v0h) src = std::make_shared<GtildeProvider>(*limit_v0h, p.nu, cfg.dt, cfg.scheme);
    auto rhs = [src](double t, const Field4& s) -> Field4 {
        if (!src) return Field4(s.grid());
        return src->at(t);
    };
    return run_if_solver(std::move(e0), p, cfg, rhs, false);
}

}  // namespace strato
