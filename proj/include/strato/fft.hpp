#pragma once

#include <vector>

#include "strato/field.hpp"

namespace strato {

// Physical-space samples of one component; complex to allow non-Hermitian data.
// Row-major, i3 fastest, matching SpectralField layout.

// c2c transforms through a process-wide plan cache (thread-safe for concurrent
// callers on distinct buffers).
void fft_forward_inplace(const GridSpec& g, std::vector<cplx>& buf);   // divides by n1*n2*n3
void fft_backward_inplace(const GridSpec& g, std::vector<cplx>& buf);  // unnormalized sum

template <int NC>
SpectralField<NC> transform_forward(const GridSpec& g, const std::vector<std::vector<cplx>>& samples) {
    if (int(samples.size()) != NC) throw std::invalid_argument("transform_forward: component count");
    SpectralField<NC> out(g);
    std::vector<cplx> buf(g.size());
    for (int c = 0; c < NC; ++c) {
        if (samples[c].size() != g.size())
            throw std::invalid_argument("transform_forward: sample count does not match grid");
        buf = samples[c];
        fft_forward_inplace(g, buf);
        std::copy(buf.begin(), buf.end(), out.comp(c).begin());
    }
    return out;
}

template <int NC>
SpectralField<NC> transform_forward_real(const GridSpec& g, const std::vector<std::vector<double>>& samples) {
    std::vector<std::vector<cplx>> cs(NC);
    for (int c = 0; c < NC; ++c) cs[c].assign(samples[c].begin(), samples[c].end());
    return transform_forward<NC>(g, cs);
}

template <int NC>
std::vector<std::vector<cplx>> transform_inverse(const SpectralField<NC>& f) {
    const GridSpec& g = f.grid();
    std::vector<std::vector<cplx>> out(NC);
    for (int c = 0; c < NC; ++c) {
        out[c].assign(f.comp(c).begin(), f.comp(c).end());
        fft_backward_inplace(g, out[c]);
    }
    return out;
}

// Real parts only; exact for Hermitian-symmetric fields.
template <int NC>
std::vector<std::vector<double>> transform_inverse_real(const SpectralField<NC>& f) {
    const GridSpec& g = f.grid();
    std::vector<std::vector<double>> out(NC);
    std::vector<cplx> buf(g.size());
    for (int c = 0; c < NC; ++c) {
        std::copy(f.comp(c).begin(), f.comp(c).end(), buf.begin());
        fft_backward_inplace(g, buf);
        out[c].resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) out[c][i] = buf[i].real();
    }
    return out;
}

// 1D transforms for vertical profiles.
void fft1d_forward_inplace(int n, std::vector<cplx>& buf);
void fft1d_backward_inplace(int n, std::vector<cplx>& buf);

VerticalProfile profile_from_samples(int n, double L, const std::vector<double>& samples);
std::vector<double> profile_to_samples(const VerticalProfile& p);

}  // namespace strato
