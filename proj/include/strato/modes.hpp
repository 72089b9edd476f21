#pragma once

#include <Eigen/Core>

#include <array>
#include <memory>
#include <optional>

#include "strato/cutoffs.hpp"
#include "strato/field.hpp"

namespace strato {

struct PhysParams {
    double nu = 1;        // kinematic viscosity
    double nu_prime = 1;  // thermal diffusivity
    double eps = 1;       // Froude number
    double kappa = 1;     // Boussinesq buoyancy scale

    PhysParams() = default;
    PhysParams(double nu_, double nup_, double eps_, double kappa_ = 1)
        : nu(nu_), nu_prime(nup_), eps(eps_), kappa(kappa_) {
        if (nu <= 0 || nu_prime <= 0 || eps <= 0)
            throw std::invalid_argument("PhysParams: nu, nu', eps must be positive");
    }

    double nu0() const { return std::min(nu, nu_prime); }
    bool equal_viscosities() const { return nu == nu_prime; }

    // Largest eps for which the eigen-expansion holds on C_{eps^m, eps^-M}
    // (requires 3M + m < 1 when nu != nu').
    double eps1(double m, double M) const;

    // Annulus validity of the eigen-expansion: |nu - nu'| eps R^2 <= sqrt(2) r.
    bool expansion_valid(const TruncationSpec& annulus) const {
        return std::abs(nu - nu_prime) * eps * annulus.R * annulus.R <=
               std::sqrt(2.0) * annulus.r;
    }
};

using Matrix4cd = Eigen::Matrix4cd;
using Vector4cd = Eigen::Vector4cd;

// Fourier symbol of L - (1/eps) P B on divergence-free fields. Throws at xi = 0.
Matrix4cd assemble_symbol(const Vec3& xi, const PhysParams& p);

// Numeric eigendecomposition with the labeling
//   lambda_1 nearest zero, lambda_2 real, lambda_3 with Im > 0, lambda_4 = conj.
struct ModeEigenSystem {
    Vec3 xi;
    std::array<cplx, 4> lambda;
    std::array<Matrix4cd, 4> proj;  // spectral projectors, sum = Id
    double cond = 0;                // eigenvector matrix condition number
    bool defective = false;         // flagged when cond exceeds the threshold
};
inline constexpr double kDefectiveCond = 1e8;

ModeEigenSystem numeric_eigendecomposition(const Matrix4cd& B);

struct AnalyticEigs {
    cplx lambda1, lambda2, lambda3, lambda4;
    double D = 0;  // remainder in Im lambda_3 = |xi_h|/(eps|xi|) - eps D
};

// Closed-form eigenvalues; for nu != nu' requires xi inside the validity annulus
// (D extracted from the numeric spectrum), for nu = nu' only xi_h != 0 (D = 0).
AnalyticEigs analytic_eigenvalues(const Vec3& xi, const PhysParams& p,
                                  const std::optional<TruncationSpec>& annulus);

// Remainder-bound report over a xi sample set (three printed bounds; the
// derivative bounds are checked by central differences with h = 1e-4 |xi|).
struct RemainderReport {
    int checked = 0;
    int violations = 0;
    double max_ratio_D = 0;      // |D| / bound
    double max_ratio_dDk = 0;    // |dD/dxi_k| / bound, k = 1,2
    double max_ratio_dD3 = 0;    // |dD/dxi_3| / bound
    Vec3 worst_xi;
};
RemainderReport check_remainder_bounds(const std::vector<Vec3>& xis, const PhysParams& p,
                                       const TruncationSpec& annulus);

// Spectral projector P_k (k = 1..4) at one wavevector. P_2 uses the closed form,
// P_1/3/4 come from the numeric eigendecomposition.
Matrix4cd spectral_projector(int k, const Vec3& xi, const PhysParams& p);

// Applies P_k mode-wise to a divergence-free field (P_2 closed form everywhere;
// k = 3,4 need xi_h != 0 and use the numeric route; xi_h = 0 modes map to zero
// for k = 3,4 after the theta/v3 split degenerates).
Field4 apply_projector(int k, const Field4& f, const PhysParams& p);

// Per-grid table of mode eigensystems (built once, concurrent reads are safe).
class ModeTable {
  public:
    ModeTable(const GridSpec& g, const PhysParams& p);

    // exp(t B(xi)) applied to one spectral 4-vector
    Vector4cd propagate(std::size_t idx, double t, const Vector4cd& u) const;
    const GridSpec& grid() const { return grid_; }
    const PhysParams& params() const { return params_; }

    // exact step matrices for a fixed dt
    std::vector<Matrix4cd> step_matrices(double dt) const;

    bool has_eigen(std::size_t idx) const;
    Vector4cd apply_proj(std::size_t idx, int k, const Vector4cd& u) const;

  private:
    struct Entry {
        enum class Kind { mean, heat_hz, eigen, expm } kind;
        std::array<cplx, 4> lambda{};
        std::array<Matrix4cd, 4> proj{};
        Matrix4cd B;  // for expm fallback
        double xi2 = 0;
    };
    GridSpec grid_;
    PhysParams params_;
    std::vector<Entry> entries_;
};

// Process-wide table cache keyed by (grid, params); safe for concurrent readers.
std::shared_ptr<const ModeTable> mode_table(const GridSpec& g, const PhysParams& p);

// Mode-wise exact semigroup of d_t f = (L - (1/eps) P B) f; t >= 0.
// When a truncation is given, the field is truncated before propagation.
Field4 propagate_semigroup(const Field4& f, double t, const PhysParams& p,
                           const std::optional<TruncationSpec>& trunc = std::nullopt);
Field4 propagate_semigroup(const ModeTable& table, const Field4& f, double t);

}  // namespace strato
