#pragma once

#include "strato/field.hpp"

namespace strato {

// C^inf step: 0 for u <= 0, 1 for u >= 1, strictly increasing in between.
double smooth_step(double u);

// Radial cutoff chi: values in [0,1], chi == 1 on [-1/2,1/2], supp chi in [-1,1].
double chi_cutoff(double x);

// Littlewood-Paley low-pass: 1 on [0,3/4], 0 on [4/3,inf).
double lp_lowpass(double r);
// Band profile phi(r) = lp_lowpass(r/2) - lp_lowpass(r), supported in [3/4, 8/3].
double lp_band(double r);

// Annulus C_{r,R} = {|xi| <= R, |xi_h| >= r} and the multiplier
// f_{r,R}(xi) = chi(|xi|/R) (1 - chi(|xi_h|/2r)), equal to 1 on C_{2r,R/2}.
struct TruncationSpec {
    double r = 0, R = 0;
    double m = 0, M = 0, eps = 0;  // optional provenance: r = eps^m, R = eps^-M

    TruncationSpec() = default;
    TruncationSpec(double r_, double R_) : r(r_), R(R_) {
        if (!(r > 0 && r < R)) throw std::invalid_argument("TruncationSpec: need 0 < r < R");
    }
    static TruncationSpec from_exponents(double m, double M, double eps);

    double multiplier(const Vec3& xi) const {
        return chi_cutoff(xi.norm() / R) * (1.0 - chi_cutoff(xi.hnorm() / (2 * r)));
    }
    bool contains(const Vec3& xi) const { return xi.norm() <= R && xi.hnorm() >= r; }
};

template <int NC>
SpectralField<NC> truncate(const SpectralField<NC>& f, const TruncationSpec& spec);

// Homogeneous dyadic block: multiplier lp_band(2^{-j}|xi|), or its horizontal
// counterpart lp_band(2^{-j}|xi_h|).
enum class BlockAxis { full, horizontal };
template <int NC>
SpectralField<NC> dyadic_block(const SpectralField<NC>& f, int j, BlockAxis axis = BlockAxis::full);
VerticalProfile dyadic_block(const VerticalProfile& p, int j);

// Dyadic index range overlapping the grid's nonzero frequencies.
struct DyadicRange {
    int jmin, jmax;
};
DyadicRange dyadic_range(const GridSpec& g);
DyadicRange dyadic_range(const VerticalProfile& p);

}  // namespace strato
