#include "strato/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace strato {

namespace {

// FFTW plan creation is not thread-safe; executions on distinct buffers are.
std::mutex plan_mutex;

fftw_plan get_plan3d(int n1, int n2, int n3, int sign) {
    static std::map<std::tuple<int, int, int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(n1, n2, n3, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cplx> dummy(std::size_t(n1) * n2 * n3);
    fftw_plan p = fftw_plan_dft_3d(n1, n2, n3, reinterpret_cast<fftw_complex*>(dummy.data()),
                                   reinterpret_cast<fftw_complex*>(dummy.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

fftw_plan get_plan1d(int n, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cplx> dummy(n);
    fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(dummy.data()),
                                   reinterpret_cast<fftw_complex*>(dummy.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

}  // namespace

void fft_forward_inplace(const GridSpec& g, std::vector<cplx>& buf) {
    if (buf.size() != g.size()) throw std::invalid_argument("fft: buffer size mismatch");
    fftw_plan p = get_plan3d(g.n1, g.n2, g.n3, FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(buf.data()));
    double inv = 1.0 / double(g.size());
    for (auto& v : buf) v *= inv;
}

void fft_backward_inplace(const GridSpec& g, std::vector<cplx>& buf) {
    if (buf.size() != g.size()) throw std::invalid_argument("fft: buffer size mismatch");
    fftw_plan p = get_plan3d(g.n1, g.n2, g.n3, FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(buf.data()));
}

void fft1d_forward_inplace(int n, std::vector<cplx>& buf) {
    fftw_plan p = get_plan1d(n, FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(buf.data()));
    double inv = 1.0 / n;
    for (auto& v : buf) v *= inv;
}

void fft1d_backward_inplace(int n, std::vector<cplx>& buf) {
    fftw_plan p = get_plan1d(n, FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(buf.data()));
}

VerticalProfile profile_from_samples(int n, double L, const std::vector<double>& samples) {
    if (int(samples.size()) != n) throw std::invalid_argument("profile: sample count mismatch");
    std::vector<cplx> buf(samples.begin(), samples.end());
    fft1d_forward_inplace(n, buf);
    VerticalProfile p(n, L);
    p.raw() = std::move(buf);
    return p;
}

std::vector<double> profile_to_samples(const VerticalProfile& p) {
    std::vector<cplx> buf = p.raw();
    fft1d_backward_inplace(p.n(), buf);
    std::vector<double> out(p.n());
    for (int i = 0; i < p.n(); ++i) out[i] = buf[i].real();
    return out;
}

}  // namespace strato
