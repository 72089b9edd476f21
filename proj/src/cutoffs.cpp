#include "strato/cutoffs.hpp"

#include <cmath>

namespace strato {

double smooth_step(double u) {
    if (u <= 0) return 0;
    if (u >= 1) return 1;
    double a = std::exp(-1.0 / u);
    double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

double chi_cutoff(double x) {
    double a = std::fabs(x);
    if (a <= 0.5) return 1;
    if (a >= 1.0) return 0;
    return 1.0 - smooth_step(2 * (a - 0.5));
}

double lp_lowpass(double r) {
    if (r <= 0.75) return 1;
    if (r >= 4.0 / 3.0) return 0;
    return 1.0 - smooth_step((r - 0.75) / (4.0 / 3.0 - 0.75));
}

double lp_band(double r) { return lp_lowpass(r / 2) - lp_lowpass(r); }

TruncationSpec TruncationSpec::from_exponents(double m, double M, double eps) {
    if (eps <= 0) throw std::invalid_argument("TruncationSpec: eps must be positive");
    TruncationSpec s(std::pow(eps, m), std::pow(eps, -M));
    s.m = m;
    s.M = M;
    s.eps = eps;
    return s;
}

template <int NC>
SpectralField<NC> truncate(const SpectralField<NC>& f, const TruncationSpec& spec) {
    const GridSpec& g = f.grid();
    SpectralField<NC> out = f;
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        double m = spec.multiplier(g.xi(i1, i2, i3));
        for (int c = 0; c < NC; ++c) out.at(c, idx) *= m;
    });
    return out;
}
template SpectralField<1> truncate(const SpectralField<1>&, const TruncationSpec&);
template SpectralField<2> truncate(const SpectralField<2>&, const TruncationSpec&);
template SpectralField<4> truncate(const SpectralField<4>&, const TruncationSpec&);

template <int NC>
SpectralField<NC> dyadic_block(const SpectralField<NC>& f, int j, BlockAxis axis) {
    const GridSpec& g = f.grid();
    SpectralField<NC> out = f;
    double scale = std::pow(2.0, -j);
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        double r = axis == BlockAxis::full ? xi.norm() : xi.hnorm();
        double m = lp_band(scale * r);
        for (int c = 0; c < NC; ++c) out.at(c, idx) *= m;
    });
    return out;
}
template SpectralField<1> dyadic_block(const SpectralField<1>&, int, BlockAxis);
template SpectralField<2> dyadic_block(const SpectralField<2>&, int, BlockAxis);
template SpectralField<4> dyadic_block(const SpectralField<4>&, int, BlockAxis);

VerticalProfile dyadic_block(const VerticalProfile& p, int j) {
    VerticalProfile out = p;
    double scale = std::pow(2.0, -j);
    for (int i = 0; i < p.n(); ++i) out.at(i) *= lp_band(scale * std::fabs(p.xi3(i)));
    return out;
}

namespace {
DyadicRange range_for(double ximin, double ximax) {
    // block j covers |xi| in [(3/4) 2^j, (8/3) 2^j]
    int jmin = int(std::floor(std::log2(ximin / (8.0 / 3.0))));
    int jmax = int(std::ceil(std::log2(ximax / 0.75)));
    return {jmin, jmax};
}
}  // namespace

DyadicRange dyadic_range(const GridSpec& g) {
    double ximin = 2 * M_PI * std::min({1.0 / g.L1, 1.0 / g.L2, 1.0 / g.L3});
    return range_for(ximin, g.xi_max());
}

DyadicRange dyadic_range(const VerticalProfile& p) {
    double ximin = 2 * M_PI / p.period();
    return range_for(ximin, 2 * M_PI * (p.n() / 2) / p.period());
}

}  // namespace strato
