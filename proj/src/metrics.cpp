#include "lwsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lwsim/errors.hpp"
#include "lwsim/fft.hpp"

namespace lwsim {

EyeHistogram eye_histogram(const RealWaveform& w, double baud, const TimingEstimate& phase,
                           std::size_t time_bins, std::size_t amplitude_bins) {
    if (time_bins < 8 || amplitude_bins < 8) throw ConfigError("eye histogram bins too coarse");
    if (w.duration() * baud < 1000.0)
        throw ConfigError("eye histogram needs at least 1000 symbols");

    EyeHistogram h;
    h.time_bins = time_bins;
    h.amplitude_bins = amplitude_bins;
    h.counts.assign(time_bins * amplitude_bins, 0);

    const auto [mn, mx] = std::minmax_element(w.samples.begin(), w.samples.end());
    h.amp_min = *mn;
    h.amp_max = *mx;
    const double span = h.amp_max > h.amp_min ? h.amp_max - h.amp_min : 1.0;

    const double ui_per_sample = baud / w.sample_rate;
    for (std::size_t i = 0; i < w.size(); ++i) {
        double u = static_cast<double>(i) * ui_per_sample - phase.phase_offset;
        u -= 2.0 * std::floor(u / 2.0); // [0, 2)
        auto tb = static_cast<std::size_t>(u / 2.0 * static_cast<double>(time_bins));
        tb = std::min(tb, time_bins - 1);
        const double a = (w.samples[i] - h.amp_min) / span;
        auto ab = static_cast<std::size_t>(a * static_cast<double>(amplitude_bins));
        ab = std::min(ab, amplitude_bins - 1);
        ++h.counts[tb * amplitude_bins + ab];
        ++h.total;
    }
    return h;
}

double q_factor(const std::vector<double>& symbols, const BitSequence& reference) {
    if (symbols.size() != reference.size())
        throw ConfigError("q-factor needs one reference bit per symbol");
    double s0 = 0.0, s1 = 0.0, q0 = 0.0, q1 = 0.0;
    std::size_t n0 = 0, n1 = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const double v = symbols[i];
        if (reference[i]) {
            s1 += v;
            q1 += v * v;
            ++n1;
        } else {
            s0 += v;
            q0 += v * v;
            ++n0;
        }
    }
    if (n0 == 0 || n1 == 0)
        throw DspError("q-factor undefined: only one symbol class present");
    const double mu0 = s0 / static_cast<double>(n0);
    const double mu1 = s1 / static_cast<double>(n1);
    const double var0 = std::max(q0 / static_cast<double>(n0) - mu0 * mu0, 0.0);
    const double var1 = std::max(q1 / static_cast<double>(n1) - mu1 * mu1, 0.0);
    const double denom = std::max(std::sqrt(var0) + std::sqrt(var1), 1e-12);
    return (mu1 - mu0) / denom;
}

double sideband_asymmetry(const ComplexEnvelope& field, double integration_band) {
    if (!(integration_band > 0.0) || integration_band > field.sample_rate / 2.0)
        throw ConfigError("integration band must be in (0, fs/2]");
    auto spec = fft::forward(field.samples);
    const std::size_t n = spec.size();
    double upper = 0.0, lower = 0.0;
    for (std::size_t k = 1; k < n; ++k) { // carrier bin 0 excluded
        const double f = fft::bin_frequency(k, n, field.sample_rate);
        if (f > 0.0 && f <= integration_band)
            upper += std::norm(spec[k]);
        else if (f < 0.0 && f >= -integration_band)
            lower += std::norm(spec[k]);
    }
    if (upper <= 0.0 || lower <= 0.0)
        throw DspError("sideband asymmetry undefined: empty sideband");
    return 10.0 * std::log10(upper / lower);
}

FecVerdict fec_verdict(double ber) {
    if (ber < 0.0 || ber > 0.5) throw ConfigError("ber must be in [0, 0.5]");
    FecVerdict v;
    v.ber = ber;
    v.pass = ber < v.threshold;
    v.margin_db = ber > 0.0 ? 10.0 * std::log10(v.threshold / ber)
                            : std::numeric_limits<double>::infinity();
    return v;
}

} // namespace lwsim
