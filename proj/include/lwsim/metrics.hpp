#ifndef LWSIM_METRICS_HPP
#define LWSIM_METRICS_HPP

#include <cstdint>
#include <vector>

#include "lwsim/dsp.hpp"
#include "lwsim/txchain.hpp"
#include "lwsim/waveform.hpp"

namespace lwsim {

// Persistence counts over (time mod 2 UI) x amplitude.
struct EyeHistogram {
    std::size_t time_bins = 0;
    std::size_t amplitude_bins = 0;
    std::vector<std::uint64_t> counts; // row-major, time major
    double amp_min = 0.0;
    double amp_max = 0.0;
    std::uint64_t total = 0;

    std::uint64_t at(std::size_t t, std::size_t a) const {
        return counts[t * amplitude_bins + a];
    }
};

// Fold the waveform modulo two symbol periods, aligned so symbol boundaries
// land on integer fold coordinates (eye centers at 0.5 and 1.5 UI).
EyeHistogram eye_histogram(const RealWaveform& w, double baud, const TimingEstimate& phase,
                           std::size_t time_bins = 128, std::size_t amplitude_bins = 128);

// Q = (mu1 - mu0) / (sigma1 + sigma0) with classes labeled by the reference.
double q_factor(const std::vector<double>& symbols, const BitSequence& reference);

// 10 log10 of upper- over lower-sideband power, integrated over (0, band]
// and [-band, 0), carrier bin excluded.
double sideband_asymmetry(const ComplexEnvelope& field, double integration_band);

inline constexpr double kFecBerThreshold = 5e-3; // pre-FEC limit, 7% OH code

struct FecVerdict {
    double ber = 0.0;
    double threshold = kFecBerThreshold;
    bool pass = false;
    double margin_db = 0.0; // 10 log10(threshold / ber)
};

FecVerdict fec_verdict(double ber);

} // namespace lwsim

#endif
