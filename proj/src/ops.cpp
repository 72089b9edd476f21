#include "strato/ops.hpp"

#include <algorithm>

#include "strato/fft.hpp"

namespace strato {

Field4 leray_project(const Field4& f) {
    const GridSpec& g = f.grid();
    Field4 out = f;
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        double n2 = xi.norm2();
        if (n2 == 0) return;  // mean mode carries no constraint
        cplx dot = xi.x * f.at(0, idx) + xi.y * f.at(1, idx) + xi.z * f.at(2, idx);
        cplx s = dot / n2;
        out.at(0, idx) -= xi.x * s;
        out.at(1, idx) -= xi.y * s;
        out.at(2, idx) -= xi.z * s;
    });
    return out;
}

Field2 leray_project_h(const Field2& f) {
    const GridSpec& g = f.grid();
    Field2 out = f;
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        double h2 = xi.hnorm2();
        if (h2 == 0) return;
        cplx dot = xi.x * f.at(0, idx) + xi.y * f.at(1, idx);
        cplx s = dot / h2;
        out.at(0, idx) -= xi.x * s;
        out.at(1, idx) -= xi.y * s;
    });
    return out;
}

ScalarField vorticity(const Field4& f) {
    const GridSpec& g = f.grid();
    ScalarField w(g);
    const cplx I(0, 1);
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        w.at(0, idx) = I * (xi.x * f.at(1, idx) - xi.y * f.at(0, idx));
    });
    return w;
}

Field4 stratified_part(const Field4& f) {
    const GridSpec& g = f.grid();
    Field4 out(g);
    const cplx I(0, 1);
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        double h2 = xi.hnorm2();
        if (h2 == 0) return;  // no vorticity information at xi_h = 0
        cplx w = I * (xi.x * f.at(1, idx) - xi.y * f.at(0, idx));
        cplx m = w / (-h2);  // lap_h^{-1}
        out.at(0, idx) = -I * xi.y * m;
        out.at(1, idx) = I * xi.x * m;
    });
    return out;
}

Decomposition decompose_stratified_oscillating(const Field4& f) {
    Decomposition d{stratified_part(f), f};
    d.osc -= d.strat;
    return d;
}

double divergence_defect(const Field4& f) {
    const GridSpec& g = f.grid();
    double worst = 0;
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        double n = xi.norm();
        if (n == 0) return;
        cplx dot = xi.x * f.at(0, idx) + xi.y * f.at(1, idx) + xi.z * f.at(2, idx);
        double vmag = std::sqrt(std::norm(f.at(0, idx)) + std::norm(f.at(1, idx)) +
                                std::norm(f.at(2, idx)));
        if (vmag > 0) worst = std::max(worst, std::abs(dot) / (n * vmag));
    });
    return worst;
}

double divergence_defect_h(const Field2& f) {
    const GridSpec& g = f.grid();
    double worst = 0;
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        double h = xi.hnorm();
        if (h == 0) return;
        cplx dot = xi.x * f.at(0, idx) + xi.y * f.at(1, idx);
        double vmag = std::sqrt(std::norm(f.at(0, idx)) + std::norm(f.at(1, idx)));
        if (vmag > 0) worst = std::max(worst, std::abs(dot) / (h * vmag));
    });
    return worst;
}

template <int NC>
SpectralField<NC> derivative(const SpectralField<NC>& f, int axis) {
    const GridSpec& g = f.grid();
    SpectralField<NC> out = f;
    const cplx I(0, 1);
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        Vec3 xi = g.xi(i1, i2, i3);
        double x = axis == 0 ? xi.x : axis == 1 ? xi.y : xi.z;
        for (int c = 0; c < NC; ++c) out.at(c, idx) = I * x * f.at(c, idx);
    });
    return out;
}
template SpectralField<1> derivative(const SpectralField<1>&, int);
template SpectralField<2> derivative(const SpectralField<2>&, int);
template SpectralField<4> derivative(const SpectralField<4>&, int);

template <int NC>
void apply_dealias_mask(SpectralField<NC>& f) {
    const GridSpec& g = f.grid();
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        if (!g.dealias_keeps(i1, i2, i3))
            for (int c = 0; c < NC; ++c) f.at(c, idx) = 0;
    });
}
template void apply_dealias_mask(SpectralField<1>&);
template void apply_dealias_mask(SpectralField<2>&);
template void apply_dealias_mask(SpectralField<4>&);

template <int NC>
SpectralField<NC> heat_flow(const SpectralField<NC>& f, double nu, double t) {
    const GridSpec& g = f.grid();
    SpectralField<NC> out = f;
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        double damp = std::exp(-nu * t * g.xi(i1, i2, i3).norm2());
        for (int c = 0; c < NC; ++c) out.at(c, idx) *= damp;
    });
    return out;
}
template SpectralField<1> heat_flow(const SpectralField<1>&, double, double);
template SpectralField<2> heat_flow(const SpectralField<2>&, double, double);
template SpectralField<4> heat_flow(const SpectralField<4>&, double, double);

Field4 apply_B_matrix(const Field4& f) {
    Field4 out(f.grid());
    std::size_t n = f.grid().size();
    for (std::size_t i = 0; i < n; ++i) {
        out.at(2, i) = f.at(3, i);
        out.at(3, i) = -f.at(2, i);
    }
    return out;
}

namespace {

// gradients of all components of g in physical space, as real arrays
template <int NC>
std::array<std::vector<std::vector<double>>, 3> physical_gradients(const SpectralField<NC>& g) {
    std::array<std::vector<std::vector<double>>, 3> out;
    for (int ax = 0; ax < 3; ++ax) out[ax] = transform_inverse_real(derivative(g, ax));
    return out;
}

}  // namespace

Field4 advect(const Field4& f, const Field4& g) {
    f.check_same_grid(g);
    const GridSpec& gr = f.grid();
    auto v = transform_inverse_real(f);
    auto grads = physical_gradients(g);
    std::vector<std::vector<double>> prod(4, std::vector<double>(gr.size()));
    for (int c = 0; c < 4; ++c)
        for (std::size_t i = 0; i < gr.size(); ++i)
            prod[c][i] = v[0][i] * grads[0][c][i] + v[1][i] * grads[1][c][i] +
                         v[2][i] * grads[2][c][i];
    Field4 out = transform_forward_real<4>(gr, prod);
    apply_dealias_mask(out);
    return out;
}

Field2 advect_h(const Field2& v, const Field2& g) {
    v.check_same_grid(g);
    const GridSpec& gr = v.grid();
    auto vp = transform_inverse_real(v);
    auto gx = transform_inverse_real(derivative(g, 0));
    auto gy = transform_inverse_real(derivative(g, 1));
    std::vector<std::vector<double>> prod(2, std::vector<double>(gr.size()));
    for (int c = 0; c < 2; ++c)
        for (std::size_t i = 0; i < gr.size(); ++i)
            prod[c][i] = vp[0][i] * gx[c][i] + vp[1][i] * gy[c][i];
    Field2 out = transform_forward_real<2>(gr, prod);
    apply_dealias_mask(out);
    return out;
}

void add_vertical_profile(Field4& f, int comp, const VerticalProfile& p) {
    const GridSpec& g = f.grid();
    if (p.n() != g.n3) throw std::invalid_argument("vertical profile length mismatch");
    for (int i3 = 0; i3 < g.n3; ++i3) f.at(comp, g.flat(0, 0, i3)) += p.at(i3);
}

VerticalProfile extract_vertical_profile(const Field4& f, int comp) {
    const GridSpec& g = f.grid();
    VerticalProfile p(g.n3, g.L3);
    for (int i3 = 0; i3 < g.n3; ++i3) p.at(i3) = f.at(comp, g.flat(0, 0, i3));
    return p;
}

Field2 horizontal_components(const Field4& f) {
    Field2 out(f.grid());
    std::copy(f.comp(0).begin(), f.comp(0).end(), out.comp(0).begin());
    std::copy(f.comp(1).begin(), f.comp(1).end(), out.comp(1).begin());
    return out;
}

Field4 embed_horizontal(const Field2& vh) {
    Field4 out(vh.grid());
    std::copy(vh.comp(0).begin(), vh.comp(0).end(), out.comp(0).begin());
    std::copy(vh.comp(1).begin(), vh.comp(1).end(), out.comp(1).begin());
    return out;
}

double max_velocity_amplitude(const Field4& f) {
    auto v = transform_inverse_real(f);
    double m = 0;
    for (std::size_t i = 0; i < f.grid().size(); ++i) {
        double a = v[0][i] * v[0][i] + v[1][i] * v[1][i] + v[2][i] * v[2][i];
        m = std::max(m, a);
    }
    return std::sqrt(m);
}

}  // namespace strato
