#ifndef LWSIM_DSP_HPP
#define LWSIM_DSP_HPP

#include <cstdint>
#include <vector>

#include "lwsim/txchain.hpp"
#include "lwsim/waveform.hpp"

namespace lwsim {

struct TimingEstimate {
    double phase_offset = 0.0; // fraction of a symbol period, in [-0.5, 0.5)
    double confidence_db = 0.0; // clock line power over neighboring content
};

// Spectral-line timing estimator: mean removal, squaring, single-bin
// projection at the symbol rate. Phase 0 corresponds to symbol boundaries
// on integer multiples of the symbol period from the first sample.
// Throws DspError when the line-to-floor ratio is below 6 dB.
TimingEstimate clock_recover(const RealWaveform& w, double baud);

// One sample per symbol at the eye center, after removing the recovered
// phase. Symbol n corresponds to time (n + 0.5 + phase) / baud.
std::vector<double> resample_to_symbols(const RealWaveform& w, double baud,
                                        const TimingEstimate& estimate);

struct DfeConfig {
    int n_ff = 6;            // feed-forward taps (symbol-spaced)
    int n_fb = 6;            // feedback taps over past decisions
    double step_mu = 1e-3;   // LMS step
    int train_symbols = 20000; // data-aided span per pass
    int passes = 3;          // training sweeps before the measurement sweep
    bool frozen = false;     // no adaptation: w = {1}, plain slicer
};

struct DfeResult {
    BitSequence decided;          // decisions from the measurement sweep
    std::vector<double> soft;     // equalizer output y[n] for the same span
    std::vector<double> ff_taps;
    std::vector<double> fb_taps;
    std::vector<double> mse_trace; // windowed mean-square error, training
    int discard = 0;              // leading decisions dropped (n_ff + n_fb)
};

// Symbol-spaced LMS decision-feedback equalizer. `reference` must be the
// transmitted bit for each input sample (already aligned); targets are the
// +/-1 mapping. Training passes are data-aided, the measurement sweep is
// decision-directed. Throws DspError if the error power diverges.
DfeResult dfe_equalize(const std::vector<double>& x, const DfeConfig& cfg,
                       const BitSequence& reference);

struct Alignment {
    std::size_t offset = 0;   // reference rotation matching the data
    bool inverted = false;
    double correlation = 0.0; // normalized, in [0, 1]
};

// Best circular alignment of hard decisions against one period of the
// reference, over all rotations and both polarities (FFT correlation).
Alignment align_bits(const BitSequence& decided, const BitSequence& reference_period);

// Threshold at the mean, then align_bits.
Alignment align_symbols(const std::vector<double>& symbols,
                        const BitSequence& reference_period);

struct BerRecord {
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;
    double ber = 0.0;
    std::size_t alignment_offset = 0;
    bool polarity_inverted = false;
    double ci_low = 0.0;  // 95% exact binomial
    double ci_high = 0.0;
    bool sync_failed = false; // correlation below 0.2; ber forced to 0.5
    bool reportable = true;   // counted bits >= 1e5
    bool reliable = true;     // at least 10 errors counted
};

// PRBS-synchronized error counting. Guard bits at both ends of the decided
// sequence are excluded from the count.
BerRecord count_errors(const BitSequence& decided, const BitSequence& reference_period,
                       std::size_t guard_bits = 256);

// Exact (Clopper-Pearson) two-sided 95% interval; the k = 0 upper bound is
// the rule-of-three value 3/n.
void binomial_interval_95(std::uint64_t k, std::uint64_t n, double& low, double& high);

} // namespace lwsim

#endif
