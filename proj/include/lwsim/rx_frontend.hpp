#ifndef LWSIM_RX_FRONTEND_HPP
#define LWSIM_RX_FRONTEND_HPP

#include "lwsim/rng.hpp"
#include "lwsim/waveform.hpp"

namespace lwsim {

struct PhotodiodeSpec {
    double responsivity = 0.5;      // A/W
    double bandwidth_f3db = 100e9;  // Hz
    double thermal_current_density = 15e-12; // A/sqrt(Hz)
    bool shot_noise_enabled = true;
};

struct DsoSpec {
    double sample_rate = 240e9;    // Sa/s
    double bandwidth_f3db = 100e9; // Hz
    int quantizer_bits = 8;        // 0 disables quantization
    double full_scale = 0.0;       // V; 0 = auto at 4x RMS
    std::size_t record_symbols = 0; // 0 skips the length check
};

// Square-law detection i = R |E|^2 with white shot/thermal noise added at
// the mean-photocurrent operating point, then the diode's Gaussian band
// limit. Output is in amperes.
RealWaveform photodetect(const ComplexEnvelope& field, const PhotodiodeSpec& spec,
                         RngStream& stream);

// Scope capture: front-end band limit, decimation to the scope rate
// (deliberately incommensurate with the symbol grid at the default rates)
// and optional mid-rise quantization over +/- full scale.
RealWaveform dso_capture(const RealWaveform& w, const DsoSpec& spec, double baud = 0.0);

} // namespace lwsim

#endif
