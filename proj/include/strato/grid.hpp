#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace strato {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    double hnorm2() const { return x * x + y * y; }
    double hnorm() const { return std::sqrt(hnorm2()); }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

// Periodic box [0,L1)x[0,L2)x[0,L3) sampled on n1 x n2 x n3 points.
// Retained wavenumbers on axis i are k in [-n_i/2, n_i/2), xi = 2*pi*k/L_i.
struct GridSpec {
    int n1 = 0, n2 = 0, n3 = 0;
    double L1 = 2 * M_PI, L2 = 2 * M_PI, L3 = 2 * M_PI;
    double dealias = 2.0 / 3.0;

    GridSpec() = default;
    GridSpec(int n1_, int n2_, int n3_, double L1_ = 2 * M_PI, double L2_ = 2 * M_PI,
             double L3_ = 2 * M_PI, double dealias_ = 2.0 / 3.0)
        : n1(n1_), n2(n2_), n3(n3_), L1(L1_), L2(L2_), L3(L3_), dealias(dealias_) {
        if (n1 <= 0 || n2 <= 0 || n3 <= 0 || n1 % 2 || n2 % 2 || n3 % 2)
            throw std::invalid_argument("GridSpec: mode counts must be positive even integers");
        if (L1 <= 0 || L2 <= 0 || L3 <= 0)
            throw std::invalid_argument("GridSpec: periods must be positive");
        if (dealias <= 0 || dealias > 1)
            throw std::invalid_argument("GridSpec: dealias fraction must lie in (0,1]");
    }

    static GridSpec cubic(int n, double L = 2 * M_PI) { return GridSpec(n, n, n, L, L, L); }

    std::size_t size() const { return std::size_t(n1) * n2 * n3; }
    double volume() const { return L1 * L2 * L3; }
    double cell_volume() const { return volume() / double(size()); }

    static int ksigned(int idx, int n) { return idx <= n / 2 - 1 ? idx : idx - n; }

    Vec3 xi(int i1, int i2, int i3) const {
        return {2 * M_PI * ksigned(i1, n1) / L1, 2 * M_PI * ksigned(i2, n2) / L2,
                2 * M_PI * ksigned(i3, n3) / L3};
    }

    std::size_t flat(int i1, int i2, int i3) const {
        return (std::size_t(i1) * n2 + i2) * n3 + i3;
    }

    bool dealias_keeps(int i1, int i2, int i3) const {
        return std::abs(ksigned(i1, n1)) <= dealias * n1 / 2.0 &&
               std::abs(ksigned(i2, n2)) <= dealias * n2 / 2.0 &&
               std::abs(ksigned(i3, n3)) <= dealias * n3 / 2.0;
    }

    // grid point coordinates
    Vec3 point(int i1, int i2, int i3) const {
        return {L1 * i1 / n1, L2 * i2 / n2, L3 * i3 / n3};
    }

    double xi_max() const {
        double a = 2 * M_PI * (n1 / 2) / L1, b = 2 * M_PI * (n2 / 2) / L2,
               c = 2 * M_PI * (n3 / 2) / L3;
        return std::sqrt(a * a + b * b + c * c);
    }

    bool operator==(const GridSpec& o) const {
        return n1 == o.n1 && n2 == o.n2 && n3 == o.n3 && L1 == o.L1 && L2 == o.L2 &&
               L3 == o.L3 && dealias == o.dealias;
    }
};

// Applies fn(i1,i2,i3,flat) over the full index range.
template <class F>
void for_each_mode(const GridSpec& g, F&& fn) {
    std::size_t idx = 0;
    for (int i1 = 0; i1 < g.n1; ++i1)
        for (int i2 = 0; i2 < g.n2; ++i2)
            for (int i3 = 0; i3 < g.n3; ++i3, ++idx) fn(i1, i2, i3, idx);
}

}  // namespace strato
