#ifndef LWSIM_OPTICS_HPP
#define LWSIM_OPTICS_HPP

#include "lwsim/rng.hpp"
#include "lwsim/waveform.hpp"

namespace lwsim {

struct LaserSpec {
    double power_dbm = 13.0;
    double wavelength = 1550e-9; // m
};

struct MzmSpec {
    double v_pi = 1.1;               // V
    double bias_phase = 1.5707963267948966; // rad, quadrature by default
    double arm_ratio = 1.0;          // arm 2 drive = -arm_ratio * arm 1 drive
    double insertion_loss_db = 6.0;
};

struct EamSpec {
    double extinction_slope = 5.0;   // dB per volt
    double transparency_bias = 0.2;  // V
    double alpha_chirp = -0.8;
    double bias_voltage = -1.85;     // V
    double insertion_loss_db = 0.0;
    double modulated_output_dbm = -1.0; // calibration target for mean power
};

struct FiberSpec {
    double length = 0.0;          // m
    double dispersion_D = 17e-6;  // s/m^2  (17 ps/nm/km)
    double attenuation_db_km = 0.2;
    double wavelength = 1550e-9;  // m
};

struct EdfaSpec {
    double gain_db = 20.0;
    double noise_figure_db = 5.0;
};

// Constant field sqrt(P), zero phase.
ComplexEnvelope cw_laser(const LaserSpec& spec, std::size_t n_samples, double sample_rate);

// Dual-drive interferometric modulator:
//   E_out = L * E_in/2 * (exp(j pi v/Vpi) + exp(-j pi r v/Vpi + j bias)).
// r = 1 is chirp-free push-pull; r != 1 leaves residual phase modulation
// and a spectrally asymmetric (partial single-sideband) output.
ComplexEnvelope mzm_modulate(const ComplexEnvelope& field, const RealWaveform& drive,
                             const MzmSpec& spec);

// Electro-absorption modulator with a linear-in-dB absorption curve,
// transmission clamped to [-30 dB, 0 dB], chirp exp(j alpha/2 ln T), and the
// output rescaled to the calibrated mean power.
ComplexEnvelope eam_modulate(const ComplexEnvelope& field, const RealWaveform& drive,
                             const EamSpec& spec);

// Linear dispersive propagation H(f) = exp(j pi D lambda^2 L f^2 / c) plus
// scalar attenuation. With this sign and D > 0, a Gaussian pulse
// exp(-(1+jC) t^2 / 2 T0^2) initially compresses for C < 0 and broadens for
// C > 0 (verified by the chirped-pulse tests).
ComplexEnvelope fiber_propagate(const ComplexEnvelope& field, const FiberSpec& spec);

// sqrt(G) field gain plus circular ASE of PSD n_sp h nu (G-1) over the
// simulation band, single polarization, n_sp = 10^(NF/10)/2.
ComplexEnvelope edfa_amplify(const ComplexEnvelope& field, const EdfaSpec& spec,
                             RngStream& stream);

ComplexEnvelope voa(const ComplexEnvelope& field, double attenuation_db);

// Attenuation (dB >= 0) that brings the mean power to the target; rejects
// targets above the available power.
double voa_attenuation_for_rop(const ComplexEnvelope& field, double target_dbm);

} // namespace lwsim

#endif
