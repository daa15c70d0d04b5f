#include "lwsim/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "lwsim/errors.hpp"

namespace lwsim::fft {

namespace {

// Plan cache keyed by (size, direction). Plans are created with
// FFTW_UNALIGNED so the new-array execute functions accept plain
// std::vector storage. Planning is serialized (FFTW requirement);
// execution is thread-safe.
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::vector<std::complex<double>> in(n), out(n);
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                       reinterpret_cast<fftw_complex*>(in.data()),
                                       reinterpret_cast<fftw_complex*>(out.data()), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (p == nullptr) throw std::runtime_error("fftw planning failed");
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& in, int sign) {
    if (in.empty()) throw ConfigError("fft of empty vector");
    const std::size_t n = in.size();
    std::vector<std::complex<double>> out(n);
    fftw_plan p = cache().get(n, sign);
    // fftw_complex and std::complex<double> are layout-compatible
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(p, src, dst);
    return out;
}

} // namespace

std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in) {
    return run(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in) {
    auto out = run(in, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (auto& v : out) v *= scale;
    return out;
}

double bin_frequency(std::size_t k, std::size_t n, double fs) {
    const auto nn = static_cast<std::ptrdiff_t>(n);
    auto kk = static_cast<std::ptrdiff_t>(k);
    if (2 * kk >= nn) kk -= nn;
    return static_cast<double>(kk) * fs / static_cast<double>(n);
}

} // namespace lwsim::fft
