#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "strato/grid.hpp"

namespace strato {

using cplx = std::complex<double>;

// Spectral field with NC complex components per retained wavevector.
// Storage is [component][i1][i2][i3], i3 fastest. Coefficients are Fourier
// series coefficients: f(x) = sum_xi c_xi exp(i xi.x).
template <int NC>
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(const GridSpec& g) : grid_(g), data_(g.size() * NC, cplx(0)) {}

    const GridSpec& grid() const { return grid_; }
    static constexpr int ncomp() { return NC; }

    cplx& at(int c, std::size_t flat) { return data_[std::size_t(c) * grid_.size() + flat]; }
    const cplx& at(int c, std::size_t flat) const {
        return data_[std::size_t(c) * grid_.size() + flat];
    }
    cplx& at(int c, int i1, int i2, int i3) { return at(c, grid_.flat(i1, i2, i3)); }
    const cplx& at(int c, int i1, int i2, int i3) const { return at(c, grid_.flat(i1, i2, i3)); }

    std::span<cplx> comp(int c) { return {data_.data() + std::size_t(c) * grid_.size(), grid_.size()}; }
    std::span<const cplx> comp(int c) const {
        return {data_.data() + std::size_t(c) * grid_.size(), grid_.size()};
    }

    std::vector<cplx>& raw() { return data_; }
    const std::vector<cplx>& raw() const { return data_; }

    SpectralField& operator+=(const SpectralField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    SpectralField& operator*=(double s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    void check_same_grid(const SpectralField& o) const {
        if (!(grid_ == o.grid_)) throw std::invalid_argument("field grids do not match");
    }

  private:
    GridSpec grid_;
    std::vector<cplx> data_;
};

using Field4 = SpectralField<4>;       // (v1, v2, v3, theta)
using Field2 = SpectralField<2>;       // horizontal velocity
using ScalarField = SpectralField<1>;  // scalars (vorticity, pressure, ...)

// Vertical profile: complex coefficients over xi3 = 2*pi*k/L3, k in [-n/2, n/2).
class VerticalProfile {
  public:
    VerticalProfile() = default;
    VerticalProfile(int n, double L = 2 * M_PI) : n_(n), L_(L), data_(n, cplx(0)) {
        if (n <= 0 || n % 2) throw std::invalid_argument("VerticalProfile: n must be positive even");
    }

    int n() const { return n_; }
    double period() const { return L_; }
    double xi3(int i) const { return 2 * M_PI * GridSpec::ksigned(i, n_) / L_; }

    cplx& at(int i) { return data_[i]; }
    const cplx& at(int i) const { return data_[i]; }
    std::vector<cplx>& raw() { return data_; }
    const std::vector<cplx>& raw() const { return data_; }

    VerticalProfile& operator-=(const VerticalProfile& o) {
        for (int i = 0; i < n_; ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend VerticalProfile operator-(VerticalProfile a, const VerticalProfile& b) { return a -= b; }

  private:
    int n_ = 0;
    double L_ = 2 * M_PI;
    std::vector<cplx> data_;
};

template <int NC>
double hermitian_defect(const SpectralField<NC>& f) {
    const auto& g = f.grid();
    double worst = 0, scale = 0;
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        int j1 = (g.n1 - i1) % g.n1, j2 = (g.n2 - i2) % g.n2, j3 = (g.n3 - i3) % g.n3;
        std::size_t jdx = g.flat(j1, j2, j3);
        for (int c = 0; c < NC; ++c) {
            worst = std::max(worst, std::abs(f.at(c, idx) - std::conj(f.at(c, jdx))));
            scale = std::max(scale, std::abs(f.at(c, idx)));
        }
    });
    return scale > 0 ? worst / scale : 0.0;
}

// Projects onto the Hermitian-symmetric part (real physical field).
template <int NC>
void hermitianize(SpectralField<NC>& f) {
    const auto& g = f.grid();
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        int j1 = (g.n1 - i1) % g.n1, j2 = (g.n2 - i2) % g.n2, j3 = (g.n3 - i3) % g.n3;
        std::size_t jdx = g.flat(j1, j2, j3);
        if (jdx < idx) return;
        for (int c = 0; c < NC; ++c) {
            cplx a = f.at(c, idx), b = f.at(c, jdx);
            cplx m = 0.5 * (a + std::conj(b));
            f.at(c, idx) = m;
            f.at(c, jdx) = std::conj(m);
        }
    });
}

}  // namespace strato
