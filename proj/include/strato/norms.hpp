#pragma once

#include <string>
#include <vector>

#include "strato/field.hpp"

namespace strato {

// Spatial norm selector. Conventions:
//  - L^2 matches physical-space quadrature: ||f||_2^2 = V * sum_xi |c_xi|^2.
//  - Homogeneous Sobolev and Besov norms drop the xi = 0 mode.
//  - Anisotropic L^{m,q}_{v,h}: L^q over the horizontal variables inside,
//    L^m over the vertical variable outside.
struct NormSpec {
    enum class Kind { lebesgue, sobolev, besov, aniso };
    Kind kind = Kind::lebesgue;
    double s = 0;           // smoothness for sobolev/besov
    double p = 2;           // lebesgue / besov integrability (inf = infinity())
    double q = 1;           // besov summation / aniso horizontal exponent
    double m = 2;           // aniso vertical exponent

    static constexpr double infinity() { return -1; }  // marker for p = infinity

    static NormSpec L2() { return {Kind::lebesgue, 0, 2, 1, 2}; }
    static NormSpec Lp(double p) { return {Kind::lebesgue, 0, p, 1, 2}; }
    static NormSpec Linf() { return {Kind::lebesgue, 0, infinity(), 1, 2}; }
    static NormSpec hdot(double s) { return {Kind::sobolev, s, 2, 1, 2}; }
    static NormSpec bdot(double s, double p, double q) { return {Kind::besov, s, p, q, 2}; }
    static NormSpec aniso_vh(double m_v, double q_h) { return {Kind::aniso, 0, 2, q_h, m_v}; }

    std::string id() const;
    static NormSpec parse(const std::string& id);
};

template <int NC>
double norm(const SpectralField<NC>& f, const NormSpec& spec);

double norm(const VerticalProfile& p, const NormSpec& spec);

// Homogeneous H^s inner product (V sum |xi|^{2s} Re<f,g>).
double hs_inner(const Field4& f, const Field4& g, double s);

// L^p norm in time of a sampled scalar series, nonuniform trapezoid; p = inf -> max.
double time_lp(const std::vector<double>& t, const std::vector<double>& v, double p);

// Chemin-Lerner norm: per dyadic block L^a in time of L^b in space, then
// 2^{js}-weighted l^c over blocks. Snapshots sampled on the trajectory grid.
double chemin_lerner_norm(const std::vector<double>& times, const std::vector<Field4>& snaps,
                          double a, double s, double b, double c);

}  // namespace strato
