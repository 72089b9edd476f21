#include "strato/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "strato/cutoffs.hpp"
#include "strato/fft.hpp"

namespace strato {

namespace {

bool is_inf(double p) { return p == NormSpec::infinity(); }

std::string num_str(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

template <int NC>
double lebesgue_norm(const SpectralField<NC>& f, double p) {
    const GridSpec& g = f.grid();
    auto phys = transform_inverse(f);
    double dv = g.cell_volume();
    if (is_inf(p)) {
        double m = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            double a = 0;
            for (int c = 0; c < NC; ++c) a += std::norm(phys[c][i]);
            m = std::max(m, a);
        }
        return std::sqrt(m);
    }
    double acc = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double a = 0;
        for (int c = 0; c < NC; ++c) a += std::norm(phys[c][i]);
        acc += std::pow(a, p / 2.0);
    }
    return std::pow(acc * dv, 1.0 / p);
}

template <int NC>
double sobolev_norm(const SpectralField<NC>& f, double s) {
    const GridSpec& g = f.grid();
    double acc = 0;
    for_each_mode(g, [&](int i1, int i2, int i3, std::size_t idx) {
        double n2 = g.xi(i1, i2, i3).norm2();
        if (n2 == 0) return;
        double a = 0;
        for (int c = 0; c < NC; ++c) a += std::norm(f.at(c, idx));
        acc += std::pow(n2, s) * a;
    });
    return std::sqrt(g.volume() * acc);
}

template <int NC>
double besov_norm(const SpectralField<NC>& f, double s, double p, double q) {
    auto [jmin, jmax] = dyadic_range(f.grid());
    double acc = 0, sup = 0;
    for (int j = jmin; j <= jmax; ++j) {
        SpectralField<NC> blk = dyadic_block(f, j);
        blk.at(0, 0) = 0;  // homogeneous: drop the mean
        double a = std::pow(2.0, j * s) * lebesgue_norm(blk, p);
        if (is_inf(q))
            sup = std::max(sup, a);
        else
            acc += std::pow(a, q);
    }
    return is_inf(q) ? sup : std::pow(acc, 1.0 / q);
}

template <int NC>
double aniso_norm(const SpectralField<NC>& f, double m_v, double q_h) {
    const GridSpec& g = f.grid();
    auto phys = transform_inverse(f);
    double dh = (g.L1 / g.n1) * (g.L2 / g.n2);
    double dv = g.L3 / g.n3;
    double acc = 0, sup = 0;
    for (int i3 = 0; i3 < g.n3; ++i3) {
        double slab = 0, slab_sup = 0;
        for (int i1 = 0; i1 < g.n1; ++i1)
            for (int i2 = 0; i2 < g.n2; ++i2) {
                std::size_t idx = g.flat(i1, i2, i3);
                double a = 0;
                for (int c = 0; c < NC; ++c) a += std::norm(phys[c][idx]);
                if (is_inf(q_h))
                    slab_sup = std::max(slab_sup, a);
                else
                    slab += std::pow(a, q_h / 2.0);
            }
        double hnorm = is_inf(q_h) ? std::sqrt(slab_sup) : std::pow(slab * dh, 1.0 / q_h);
        if (is_inf(m_v))
            sup = std::max(sup, hnorm);
        else
            acc += std::pow(hnorm, m_v);
    }
    return is_inf(m_v) ? sup : std::pow(acc * dv, 1.0 / m_v);
}

}  // namespace

std::string NormSpec::id() const {
    auto pstr = [](double p) { return is_inf(p) ? std::string("inf") : num_str(p); };
    switch (kind) {
        case Kind::lebesgue: return "L" + pstr(p);
        case Kind::sobolev: return "Hdot" + num_str(s);
        case Kind::besov: return "Bdot" + num_str(s) + "_" + pstr(p) + "_" + pstr(q);
        case Kind::aniso: return "Lvh" + pstr(m) + "_" + pstr(q);
    }
    return "?";
}

NormSpec NormSpec::parse(const std::string& id) {
    auto num = [](const std::string& s) {
        if (s == "inf") return infinity();
        return std::stod(s);
    };
    if (id.rfind("Hdot", 0) == 0) return hdot(num(id.substr(4)));
    if (id.rfind("Bdot", 0) == 0) {
        std::string rest = id.substr(4);
        auto u1 = rest.find('_');
        auto u2 = rest.find('_', u1 + 1);
        if (u1 == std::string::npos || u2 == std::string::npos)
            throw std::invalid_argument("bad Besov norm id: " + id);
        return bdot(num(rest.substr(0, u1)), num(rest.substr(u1 + 1, u2 - u1 - 1)),
                    num(rest.substr(u2 + 1)));
    }
    if (id.rfind("Lvh", 0) == 0) {
        std::string rest = id.substr(3);
        auto u = rest.find('_');
        if (u == std::string::npos) throw std::invalid_argument("bad aniso norm id: " + id);
        return aniso_vh(num(rest.substr(0, u)), num(rest.substr(u + 1)));
    }
    if (id.rfind("L", 0) == 0) return id == "Linf" ? Linf() : Lp(num(id.substr(1)));
    throw std::invalid_argument("unknown norm id: " + id);
}

template <int NC>
double norm(const SpectralField<NC>& f, const NormSpec& spec) {
    if (f.grid().size() == 0) throw std::invalid_argument("norm of empty field");
    switch (spec.kind) {
        case NormSpec::Kind::lebesgue: return lebesgue_norm(f, spec.p);
        case NormSpec::Kind::sobolev: return sobolev_norm(f, spec.s);
        case NormSpec::Kind::besov: return besov_norm(f, spec.s, spec.p, spec.q);
        case NormSpec::Kind::aniso: return aniso_norm(f, spec.m, spec.q);
    }
    return 0;
}
template double norm(const SpectralField<1>&, const NormSpec&);
template double norm(const SpectralField<2>&, const NormSpec&);
template double norm(const SpectralField<4>&, const NormSpec&);

double norm(const VerticalProfile& p, const NormSpec& spec) {
    int n = p.n();
    double L = p.period();
    if (spec.kind == NormSpec::Kind::sobolev) {
        double acc = 0;
        for (int i = 0; i < n; ++i) {
            double x = p.xi3(i);
            if (x == 0) continue;
            acc += std::pow(x * x, spec.s) * std::norm(p.at(i));
        }
        return std::sqrt(L * acc);
    }
    if (spec.kind == NormSpec::Kind::besov) {
        auto [jmin, jmax] = dyadic_range(p);
        double acc = 0, sup = 0;
        for (int j = jmin; j <= jmax; ++j) {
            VerticalProfile blk = dyadic_block(p, j);
            double lp;
            if (spec.p == 2) {
                double a = 0;
                for (int i = 0; i < n; ++i) a += std::norm(blk.at(i));
                lp = std::sqrt(L * a);
            } else {
                auto samp = profile_to_samples(blk);
                if (is_inf(spec.p)) {
                    lp = 0;
                    for (double v : samp) lp = std::max(lp, std::fabs(v));
                } else {
                    double a = 0;
                    for (double v : samp) a += std::pow(std::fabs(v), spec.p);
                    lp = std::pow(a * L / n, 1.0 / spec.p);
                }
            }
            double w = std::pow(2.0, j * spec.s) * lp;
            if (is_inf(spec.q))
                sup = std::max(sup, w);
            else
                acc += std::pow(w, spec.q);
        }
        return is_inf(spec.q) ? sup : std::pow(acc, 1.0 / spec.q);
    }
    // lebesgue on samples
    auto samp = profile_to_samples(p);
    if (is_inf(spec.p)) {
        double m = 0;
        for (double v : samp) m = std::max(m, std::fabs(v));
        return m;
    }
    double acc = 0;
    for (double v : samp) acc += std::pow(std::fabs(v), spec.p);
    return std::pow(acc * L / n, 1.0 / spec.p);
}

double hs_inner(const Field4& f, const Field4& g, double s) {
    f.check_same_grid(g);
    const GridSpec& gr = f.grid();
    double acc = 0;
    for_each_mode(gr, [&](int i1, int i2, int i3, std::size_t idx) {
        double n2 = gr.xi(i1, i2, i3).norm2();
        if (n2 == 0) return;
        double dot = 0;
        for (int c = 0; c < 4; ++c)
            dot += (std::conj(f.at(c, idx)) * g.at(c, idx)).real();
        acc += std::pow(n2, s) * dot;
    });
    return gr.volume() * acc;
}

double time_lp(const std::vector<double>& t, const std::vector<double>& v, double p) {
    if (t.size() != v.size() || t.empty()) throw std::invalid_argument("time_lp: bad series");
    if (is_inf(p)) return *std::max_element(v.begin(), v.end());
    double acc = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        acc += 0.5 * (std::pow(v[i], p) + std::pow(v[i + 1], p)) * (t[i + 1] - t[i]);
    return std::pow(acc, 1.0 / p);
}

double chemin_lerner_norm(const std::vector<double>& times, const std::vector<Field4>& snaps,
                          double a, double s, double b, double c) {
    if (times.size() != snaps.size() || snaps.empty())
        throw std::invalid_argument("chemin_lerner_norm: bad trajectory");
    auto [jmin, jmax] = dyadic_range(snaps[0].grid());
    double acc = 0, sup = 0;
    std::vector<double> series(times.size());
    for (int j = jmin; j <= jmax; ++j) {
        for (std::size_t i = 0; i < snaps.size(); ++i) {
            Field4 blk = dyadic_block(snaps[i], j);
            blk.at(0, 0) = blk.at(1, 0) = blk.at(2, 0) = blk.at(3, 0) = 0;
            series[i] = lebesgue_norm(blk, b);
        }
        double w = std::pow(2.0, j * s) * time_lp(times, series, a);
        if (is_inf(c))
            sup = std::max(sup, w);
        else
            acc += std::pow(w, c);
    }
    return is_inf(c) ? sup : std::pow(acc, 1.0 / c);
}

}  // namespace strato
