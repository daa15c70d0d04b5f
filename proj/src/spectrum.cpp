#include "lwsim/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "lwsim/errors.hpp"
#include "lwsim/fft.hpp"

namespace lwsim {

namespace {

std::size_t segment_length(std::size_t n, double fs, double resolution_bw) {
    if (!(resolution_bw > 0.0)) throw ConfigError("resolution bandwidth must be positive");
    if (resolution_bw < fs / static_cast<double>(n) * (1.0 - 1e-12))
        throw ConfigError("resolution bandwidth too fine for record length");
    auto nseg = static_cast<std::size_t>(std::llround(fs / resolution_bw));
    nseg = std::clamp<std::size_t>(nseg, 8, n);
    return nseg;
}

// Mean periodogram over non-overlapping rectangular segments, |X_k|^2/(nseg*fs).
std::vector<double> averaged_bins(const std::vector<std::complex<double>>& x, double fs,
                                  std::size_t nseg) {
    const std::size_t nsegs = x.size() / nseg;
    std::vector<double> acc(nseg, 0.0);
    std::vector<std::complex<double>> seg(nseg);
    for (std::size_t s = 0; s < nsegs; ++s) {
        std::copy(x.begin() + static_cast<std::ptrdiff_t>(s * nseg),
                  x.begin() + static_cast<std::ptrdiff_t>((s + 1) * nseg), seg.begin());
        auto spec = fft::forward(seg);
        for (std::size_t k = 0; k < nseg; ++k) acc[k] += std::norm(spec[k]);
    }
    const double scale = 1.0 / (static_cast<double>(nsegs) * static_cast<double>(nseg) * fs);
    for (auto& v : acc) v *= scale;
    return acc;
}

} // namespace

double Spectrum::total_power() const {
    double acc = 0.0;
    for (double v : psd) acc += v;
    return acc * bin_hz;
}

Spectrum psd(const ComplexEnvelope& w, double resolution_bw) {
    const std::size_t nseg = segment_length(w.size(), w.sample_rate, resolution_bw);
    auto bins = averaged_bins(w.samples, w.sample_rate, nseg);

    Spectrum out;
    out.domain = SpectrumDomain::optical;
    out.bin_hz = w.sample_rate / static_cast<double>(nseg);
    out.frequency_hz.resize(nseg);
    out.psd.resize(nseg);
    // fftshift so bins run from -fs/2 to +fs/2
    const std::size_t half = (nseg + 1) / 2;
    for (std::size_t i = 0; i < nseg; ++i) {
        const std::size_t k = (i + half) % nseg;
        out.frequency_hz[i] = fft::bin_frequency(k, nseg, w.sample_rate);
        out.psd[i] = bins[k];
    }
    return out;
}

Spectrum psd(const RealWaveform& w, double resolution_bw) {
    const std::size_t nseg = segment_length(w.size(), w.sample_rate, resolution_bw);
    std::vector<std::complex<double>> x(w.samples.begin(), w.samples.end());
    auto bins = averaged_bins(x, w.sample_rate, nseg);

    // one-sided: fold negative-frequency bins onto their positive twins
    const std::size_t nout = nseg / 2 + 1;
    Spectrum out;
    out.domain = SpectrumDomain::electrical;
    out.bin_hz = w.sample_rate / static_cast<double>(nseg);
    out.frequency_hz.resize(nout);
    out.psd.resize(nout);
    for (std::size_t k = 0; k < nout; ++k) {
        out.frequency_hz[k] = static_cast<double>(k) * out.bin_hz;
        double p = bins[k];
        const std::size_t mirror = (nseg - k) % nseg;
        if (mirror != k) p += bins[mirror];
        out.psd[k] = p;
    }
    return out;
}

} // namespace lwsim
