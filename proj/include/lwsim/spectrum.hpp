#ifndef LWSIM_SPECTRUM_HPP
#define LWSIM_SPECTRUM_HPP

#include <vector>

#include "lwsim/waveform.hpp"

namespace lwsim {

enum class SpectrumDomain { optical, electrical };

// Averaged power spectral density. Optical spectra are two-sided relative to
// the carrier (W/Hz); electrical spectra are one-sided (V^2/Hz or A^2/Hz).
struct Spectrum {
    std::vector<double> frequency_hz;
    std::vector<double> psd; // linear units per Hz
    double bin_hz = 0.0;
    SpectrumDomain domain = SpectrumDomain::electrical;

    double total_power() const; // integral of psd over frequency
};

// Welch-style averaged periodogram with rectangular windows chosen so the
// integrated PSD equals the mean power of the analyzed samples exactly.
// Requires resolution_bw >= sample_rate / length.
Spectrum psd(const RealWaveform& w, double resolution_bw);
Spectrum psd(const ComplexEnvelope& w, double resolution_bw);

} // namespace lwsim

#endif
