#ifndef LWSIM_SIGNAL_OPS_HPP
#define LWSIM_SIGNAL_OPS_HPP

#include <vector>

#include "lwsim/rng.hpp"
#include "lwsim/waveform.hpp"

namespace lwsim {

// Zero-phase Gaussian low-pass, |H(f3dB)|^2 = 1/2. Requires 0 < f3dB < fs/2.
RealWaveform gaussian_lowpass(const RealWaveform& w, double f3db_hz);
ComplexEnvelope gaussian_lowpass(const ComplexEnvelope& w, double f3db_hz);

// Band-limited rate conversion via frequency-domain zero-pad/truncate.
// Output length is round(n * new_rate / old_rate).
RealWaveform resample(const RealWaveform& w, double new_rate);
ComplexEnvelope resample(const ComplexEnvelope& w, double new_rate);

// Circular delay by tau seconds (positive tau delays the signal),
// realized as the phase ramp exp(-j 2 pi f tau). Requires |tau| < duration/4.
RealWaveform fractional_delay(const RealWaveform& w, double tau);
ComplexEnvelope fractional_delay(const ComplexEnvelope& w, double tau);

// Additive white Gaussian noise. For complex waveforms the noise is
// circularly symmetric with total variance sigma^2 per sample.
RealWaveform add_awgn(const RealWaveform& w, double sigma, RngStream& stream);
ComplexEnvelope add_awgn(const ComplexEnvelope& w, double sigma, RngStream& stream);

namespace detail {
// Shared frequency-domain kernels over complex sample vectors.
void apply_gaussian_lowpass(std::vector<std::complex<double>>& x, double fs, double f3db_hz);
std::vector<std::complex<double>> resample_vector(const std::vector<std::complex<double>>& x,
                                                  double old_rate, double new_rate);
void apply_fractional_delay(std::vector<std::complex<double>>& x, double fs, double tau);
} // namespace detail

} // namespace lwsim

#endif
