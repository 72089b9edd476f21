#include "strato/modes.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <map>
#include <mutex>

#include "strato/ops.hpp"

namespace strato {

double PhysParams::eps1(double m, double M) const {
    if (equal_viscosities()) return std::numeric_limits<double>::infinity();
    if (3 * M + m >= 1)
        throw std::invalid_argument("eps1 requires 3M + m < 1");
    return std::pow(std::sqrt(2.0) / std::abs(nu - nu_prime), 1.0 / (1.0 - (3 * M + m)));
}

Matrix4cd assemble_symbol(const Vec3& xi, const PhysParams& p) {
    double n2 = xi.norm2();
    if (n2 == 0) throw std::invalid_argument("assemble_symbol: symbol undefined at xi = 0");
    double x1 = xi.x, x2 = xi.y, x3 = xi.z;
    double h2 = x1 * x1 + x2 * x2;
    Matrix4cd B = Matrix4cd::Zero();
    B(0, 0) = -p.nu * (x2 * x2 + x3 * x3);
    B(0, 1) = p.nu * x1 * x2;
    B(0, 2) = p.nu * x1 * x3;
    B(0, 3) = x1 * x3 / (p.eps * n2);
    B(1, 0) = p.nu * x1 * x2;
    B(1, 1) = -p.nu * (x1 * x1 + x3 * x3);
    B(1, 2) = p.nu * x2 * x3;
    B(1, 3) = x2 * x3 / (p.eps * n2);
    B(2, 0) = p.nu * x1 * x3;
    B(2, 1) = p.nu * x2 * x3;
    B(2, 2) = -p.nu * h2;
    B(2, 3) = -h2 / (p.eps * n2);
    B(3, 2) = 1.0 / p.eps;
    B(3, 3) = -p.nu_prime * n2;
    return B;
}

ModeEigenSystem numeric_eigendecomposition(const Matrix4cd& B) {
    Eigen::ComplexEigenSolver<Matrix4cd> es(B);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed to converge");
    Vector4cd vals = es.eigenvalues();
    Matrix4cd V = es.eigenvectors();

    // label: lambda_1 nearest zero; among the rest lambda_2 has the smallest
    // |Im|; the final pair is ordered by Im (lambda_3 upward), falling back to
    // Re when the pair has collapsed onto the real axis.
    std::array<int, 4> order{0, 1, 2, 3};
    int i1 = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(vals(i)) < std::abs(vals(i1))) i1 = i;
    std::swap(order[0], order[i1]);
    int i2 = 1;
    for (int i = 2; i < 4; ++i)
        if (std::abs(vals(order[i]).imag()) < std::abs(vals(order[i2]).imag())) i2 = i;
    std::swap(order[1], order[i2]);
    cplx a = vals(order[2]), b = vals(order[3]);
    bool swap34 = std::abs(a.imag() - b.imag()) > 1e-14 * std::max(std::abs(a), std::abs(b))
                      ? a.imag() < b.imag()
                      : a.real() < b.real();
    if (swap34) std::swap(order[2], order[3]);

    ModeEigenSystem sys;
    Matrix4cd Vs;
    for (int k = 0; k < 4; ++k) {
        sys.lambda[k] = vals(order[k]);
        Vs.col(k) = V.col(order[k]);
    }
    Eigen::JacobiSVD<Matrix4cd> svd(Vs);
    double smin = svd.singularValues()(3), smax = svd.singularValues()(0);
    sys.cond = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
    sys.defective = !(sys.cond < kDefectiveCond);
    if (!sys.defective) {
        Matrix4cd Vi = Vs.inverse();
        for (int k = 0; k < 4; ++k) sys.proj[k] = Vs.col(k) * Vi.row(k);
    }
    return sys;
}

namespace {

// D such that Im lambda_3 = |xi_h|/(eps |xi|) - eps D, from the numeric spectrum.
double extract_D(const Vec3& xi, const PhysParams& p) {
    ModeEigenSystem sys = numeric_eigendecomposition(assemble_symbol(xi, p));
    return (xi.hnorm() / (p.eps * xi.norm()) - sys.lambda[2].imag()) / p.eps;
}

}  // namespace

AnalyticEigs analytic_eigenvalues(const Vec3& xi, const PhysParams& p,
                                  const std::optional<TruncationSpec>& annulus) {
    double n = xi.norm(), h = xi.hnorm();
    if (h == 0)
        throw std::domain_error("analytic_eigenvalues: requires xi_h != 0");
    AnalyticEigs out;
    out.lambda1 = 0;
    out.lambda2 = -p.nu * n * n;
    if (p.equal_viscosities()) {
        out.D = 0;
    } else {
        if (!annulus)
            throw std::domain_error("analytic_eigenvalues: nu != nu' needs a truncation annulus");
        if (!annulus->contains(xi))
            throw std::domain_error("analytic_eigenvalues: xi outside C_{r,R}");
        if (!p.expansion_valid(*annulus))
            throw std::domain_error("analytic_eigenvalues: eps above the expansion threshold");
        out.D = extract_D(xi, p);
    }
    double re = -0.5 * (p.nu + p.nu_prime) * n * n;
    double im = h / (p.eps * n) - p.eps * out.D;
    out.lambda3 = cplx(re, im);
    out.lambda4 = std::conj(out.lambda3);
    return out;
}

RemainderReport check_remainder_bounds(const std::vector<Vec3>& xis, const PhysParams& p,
                                       const TruncationSpec& annulus) {
    RemainderReport rep;
    const double c2 = (p.nu - p.nu_prime) * (p.nu - p.nu_prime);
    const double tol = 1.0 + 1e-6;
    for (const Vec3& xi : xis) {
        if (!annulus.contains(xi)) continue;
        ++rep.checked;
        double n = xi.norm(), h = xi.hnorm();
        double D = extract_D(xi, p);
        double bD = c2 / (4 * std::sqrt(2.0)) * std::pow(n, 5) / h;
        double bDk = c2 * 9 / (2 * std::sqrt(2.0)) * std::pow(n, 5) / (h * h);
        double bD3 = c2 * 15 / (4 * std::sqrt(2.0)) * std::pow(n, 4) / h;
        double step = 1e-4 * n;
        bool bad = false;
        double rD = bD > 0 ? std::abs(D) / bD : (D == 0 ? 0 : 1e300);
        rep.max_ratio_D = std::max(rep.max_ratio_D, rD);
        if (rD > tol) bad = true;
        for (int k = 0; k < 2; ++k) {
            Vec3 hi = xi, lo = xi;
            (k == 0 ? hi.x : hi.y) += step;
            (k == 0 ? lo.x : lo.y) -= step;
            double dD = (extract_D(hi, p) - extract_D(lo, p)) / (2 * step);
            double r = bDk > 0 ? std::abs(dD) / bDk : (dD == 0 ? 0 : 1e300);
            rep.max_ratio_dDk = std::max(rep.max_ratio_dDk, r);
            if (r > tol) bad = true;
        }
        Vec3 hi = xi, lo = xi;
        hi.z += step;
        lo.z -= step;
        double dD3 = (extract_D(hi, p) - extract_D(lo, p)) / (2 * step);
        double r3 = bD3 > 0 ? std::abs(dD3) / bD3 : (dD3 == 0 ? 0 : 1e300);
        rep.max_ratio_dD3 = std::max(rep.max_ratio_dD3, r3);
        if (r3 > tol) bad = true;
        if (bad) {
            ++rep.violations;
            rep.worst_xi = xi;
        }
    }
    return rep;
}

Matrix4cd spectral_projector(int k, const Vec3& xi, const PhysParams& p) {
    if (k < 1 || k > 4) throw std::invalid_argument("spectral_projector: k in 1..4");
    if (k == 2) {
        double h2 = xi.hnorm2();
        Matrix4cd P = Matrix4cd::Zero();
        if (h2 == 0) return P;
        P(0, 0) = xi.y * xi.y / h2;
        P(0, 1) = -xi.x * xi.y / h2;
        P(1, 0) = -xi.x * xi.y / h2;
        P(1, 1) = xi.x * xi.x / h2;
        return P;
    }
    ModeEigenSystem sys = numeric_eigendecomposition(assemble_symbol(xi, p));
    if (sys.defective)
        throw std::domain_error("spectral_projector: defective mode");
    return sys.proj[k - 1];
}

namespace {

struct TableKey {
    int n1, n2, n3;
    double L1, L2, L3, nu, nup, eps;
    bool operator<(const TableKey& o) const {
        return std::tie(n1, n2, n3, L1, L2, L3, nu, nup, eps) <
               std::tie(o.n1, o.n2, o.n3, o.L1, o.L2, o.L3, o.nu, o.nup, o.eps);
    }
};

}  // namespace

std::shared_ptr<const ModeTable> mode_table(const GridSpec& g, const PhysParams& p) {
    static std::map<TableKey, std::shared_ptr<const ModeTable>> cache;
    static std::mutex mtx;
    TableKey key{g.n1, g.n2, g.n3, g.L1, g.L2, g.L3, p.nu, p.nu_prime, p.eps};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<ModeTable>(g, p);
    cache.emplace(key, t);
    return t;
}

ModeTable::ModeTable(const GridSpec& g, const PhysParams& p) : grid_(g), params_(p) {
    entries_.resize(g.size());
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        Entry& e = entries_[idx];
        e.xi2 = xi.norm2();
        if (xi.norm2() == 0) {
            e.kind = Entry::Kind::mean;
            return;
        }
        if (xi.hnorm2() == 0) {
            e.kind = Entry::Kind::heat_hz;
            return;
        }
        Matrix4cd B = assemble_symbol(xi, p);
        ModeEigenSystem sys = numeric_eigendecomposition(B);
        if (sys.defective) {
            e.kind = Entry::Kind::expm;
            e.B = B;
        } else {
            e.kind = Entry::Kind::eigen;
            e.lambda = sys.lambda;
            e.proj = sys.proj;
        }
    });
}

Vector4cd ModeTable::propagate(std::size_t idx, double t, const Vector4cd& u) const {
    const Entry& e = entries_[idx];
    const PhysParams& p = params_;
    switch (e.kind) {
        case Entry::Kind::mean: {
            double tau = t / p.eps, c = std::cos(tau), s = std::sin(tau);
            Vector4cd out = u;
            out(2) = c * u(2) - s * u(3);
            out(3) = s * u(2) + c * u(3);
            return out;
        }
        case Entry::Kind::heat_hz: {
            double z2 = e.xi2;
            double a = std::exp(-p.nu * z2 * t), b = std::exp(-p.nu_prime * z2 * t);
            Vector4cd out;
            out(0) = a * u(0);
            out(1) = a * u(1);
            out(2) = u(2);  // v3 is stationary at xi_h = 0 (zero on divergence-free input)
            out(3) = b * u(3) + u(2) * (1.0 - b) / (p.eps * p.nu_prime * z2);
            return out;
        }
        case Entry::Kind::eigen: {
            Vector4cd out = Vector4cd::Zero();
            for (int k = 0; k < 4; ++k)
                out += std::exp(t * e.lambda[k]) * (e.proj[k] * u);
            return out;
        }
        case Entry::Kind::expm:
            return (t * e.B).exp() * u;
    }
    return u;
}

std::vector<Matrix4cd> ModeTable::step_matrices(double dt) const {
    std::vector<Matrix4cd> out(entries_.size());
    const PhysParams& p = params_;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& e = entries_[i];
        Matrix4cd E = Matrix4cd::Identity();
        switch (e.kind) {
            case Entry::Kind::mean: {
                double tau = dt / p.eps, c = std::cos(tau), s = std::sin(tau);
                E(2, 2) = c; E(2, 3) = -s;
                E(3, 2) = s; E(3, 3) = c;
                break;
            }
            case Entry::Kind::heat_hz: {
                double z2 = e.xi2;
                double a = std::exp(-p.nu * z2 * dt), b = std::exp(-p.nu_prime * z2 * dt);
                E(0, 0) = a; E(1, 1) = a; E(2, 2) = 1; E(3, 3) = b;
                E(3, 2) = (1.0 - b) / (p.eps * p.nu_prime * z2);
                break;
            }
            case Entry::Kind::eigen: {
                E.setZero();
                for (int k = 0; k < 4; ++k) E += std::exp(dt * e.lambda[k]) * e.proj[k];
                break;
            }
            case Entry::Kind::expm:
                E = (dt * e.B).exp();
                break;
        }
        out[i] = E;
    }
    return out;
}

bool ModeTable::has_eigen(std::size_t idx) const {
    return entries_[idx].kind == Entry::Kind::eigen;
}

Vector4cd ModeTable::apply_proj(std::size_t idx, int k, const Vector4cd& u) const {
    const Entry& e = entries_[idx];
    if (e.kind != Entry::Kind::eigen) return Vector4cd::Zero();
    return e.proj[k - 1] * u;
}

Field4 apply_projector(int k, const Field4& f, const PhysParams& p) {
    if (k < 1 || k > 4) throw std::invalid_argument("apply_projector: k in 1..4");
    if (k == 2) return stratified_part(f);
    auto table = mode_table(f.grid(), p);
    const GridSpec& g = f.grid();
    Field4 out(g);
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        if (!table->has_eigen(idx)) continue;  // k = 1,3,4 content vanishes at xi_h = 0 on
                                               // divergence-free input; mean mode excluded
        Vector4cd u;
        for (int c = 0; c < 4; ++c) u(c) = f.at(c, idx);
        Vector4cd v = table->apply_proj(idx, k, u);
        for (int c = 0; c < 4; ++c) out.at(c, idx) = v(c);
    }
    return out;
}

Field4 propagate_semigroup(const ModeTable& table, const Field4& f, double t) {
    if (t < 0) throw std::invalid_argument("propagate_semigroup: t must be >= 0");
    const GridSpec& g = f.grid();
    Field4 out(g);
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        Vector4cd u;
        for (int c = 0; c < 4; ++c) u(c) = f.at(c, idx);
        Vector4cd v = table.propagate(idx, t, u);
        for (int c = 0; c < 4; ++c) out.at(c, idx) = v(c);
    }
    return out;
}

Field4 propagate_semigroup(const Field4& f, double t, const PhysParams& p,
                           const std::optional<TruncationSpec>& trunc) {
    auto table = mode_table(f.grid(), p);
    if (trunc) return propagate_semigroup(*table, truncate(f, *trunc), t);
    return propagate_semigroup(*table, f, t);
}

}  // namespace strato
