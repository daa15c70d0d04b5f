#ifndef LWSIM_TXCHAIN_HPP
#define LWSIM_TXCHAIN_HPP

#include <cstdint>
#include <vector>

#include "lwsim/rng.hpp"
#include "lwsim/waveform.hpp"

namespace lwsim {

using BitSequence = std::vector<std::uint8_t>;

inline constexpr std::size_t kPrbs15Period = 32767;

// One period of the x^15 + x^14 + 1 maximal-length sequence.
BitSequence prbs15(std::uint16_t register_seed);

// bits[(n + shift) mod size] for all n.
BitSequence rotate(const BitSequence& bits, std::size_t shift);

// Strict 2:1 interleave a0,b0,a1,b1,...  Inputs must have equal length.
BitSequence etdm_mux(const BitSequence& a, const BitSequence& b);

// Rotation r such that rotate(of, r) == seq, or -1 if seq is not a rotation.
std::ptrdiff_t find_rotation(const BitSequence& seq, const BitSequence& of);

// Half-rate tributaries whose 2:1 interleave reproduces `target` cyclically.
// For a maximal-length sequence both come out as rotations of the sequence
// itself, which is what lets a selector cascade carry a PRBS end to end.
struct MuxTributaries {
    BitSequence even; // target[0], target[2], ...
    BitSequence odd;  // target[1], target[3], ...
};
MuxTributaries demux_periodic(const BitSequence& target);

struct SelectorSpec {
    double output_amplitude = 0.73; // V, peak-to-peak differential
    double jitter_rms = 0.0;        // s, per symbol boundary
    double bandwidth_f3db = 60e9;   // Hz
};

struct DriverSpec {
    double gain_db = 16.0;
    double bandwidth_f3db = 110e9; // Hz
    double saturation_level = 2.5; // V
};

// Positive rail of the differential NRZ drive: +/- amplitude/4 rails,
// independent Gaussian timing jitter per symbol boundary, then the
// selector's Gaussian band limit. The negative rail is the negation.
RealWaveform nrz_synthesize(const BitSequence& bits, double baud, unsigned sps,
                            const SelectorSpec& spec, RngStream& stream);

// Linear gain, Gaussian band limit, then tanh soft limiting.
RealWaveform driver_amplify(const RealWaveform& w, const DriverSpec& spec);

} // namespace lwsim

#endif
