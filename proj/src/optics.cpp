#include "lwsim/optics.hpp"

#include <cmath>
#include <numbers>

#include "lwsim/errors.hpp"
#include "lwsim/fft.hpp"
#include "lwsim/signal_ops.hpp"

namespace lwsim {

namespace {

constexpr double kSpeedOfLight = 299792458.0; // m/s
constexpr double kPlanck = 6.62607015e-34;    // J s

void check_rates(const ComplexEnvelope& field, const RealWaveform& drive) {
    if (field.sample_rate != drive.sample_rate)
        throw ConfigError("modulator drive and field sample rates differ");
    if (field.size() != drive.size())
        throw ConfigError("modulator drive and field lengths differ");
}

} // namespace

ComplexEnvelope cw_laser(const LaserSpec& spec, std::size_t n_samples, double sample_rate) {
    if (n_samples == 0) throw ConfigError("laser output must have at least one sample");
    if (spec.power_dbm > 20.0) throw ConfigError("laser power above 20 dBm");
    if (spec.wavelength < 1.52e-6 || spec.wavelength > 1.57e-6)
        throw ConfigError("laser wavelength outside C-band");
    const double amp = std::sqrt(dbm_to_watt(spec.power_dbm));
    return ComplexEnvelope(std::vector<std::complex<double>>(n_samples, amp), sample_rate,
                           spec.wavelength);
}

ComplexEnvelope mzm_modulate(const ComplexEnvelope& field, const RealWaveform& drive,
                             const MzmSpec& spec) {
    check_rates(field, drive);
    if (!(spec.v_pi > 0.0)) throw ConfigError("mzm v_pi must be positive");
    if (spec.arm_ratio < 0.0) throw ConfigError("mzm arm ratio must be >= 0");
    if (spec.insertion_loss_db < 0.0) throw ConfigError("mzm insertion loss must be >= 0");

    const double loss = std::pow(10.0, -spec.insertion_loss_db / 20.0);
    const double k = std::numbers::pi / spec.v_pi;
    ComplexEnvelope out = field;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double v = drive.samples[i];
        const auto arm1 = std::polar(1.0, k * v);
        const auto arm2 = std::polar(1.0, -k * spec.arm_ratio * v + spec.bias_phase);
        out.samples[i] *= 0.5 * loss * (arm1 + arm2);
    }
    return out;
}

ComplexEnvelope eam_modulate(const ComplexEnvelope& field, const RealWaveform& drive,
                             const EamSpec& spec) {
    check_rates(field, drive);
    if (!(spec.extinction_slope > 0.0)) throw ConfigError("eam extinction slope must be positive");
    if (!std::isfinite(spec.alpha_chirp)) throw ConfigError("eam chirp parameter must be finite");

    const double loss = std::pow(10.0, -spec.insertion_loss_db / 20.0);
    ComplexEnvelope out = field;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double v = spec.bias_voltage + drive.samples[i];
        double t_db = -spec.extinction_slope * (spec.transparency_bias - v);
        t_db = std::clamp(t_db, -30.0, 0.0);
        const double ln_t = t_db * std::numbers::ln10 / 10.0;
        out.samples[i] *=
            loss * std::polar(std::exp(0.5 * ln_t), 0.5 * spec.alpha_chirp * ln_t);
    }
    // calibrate the modulated launch power
    const double target = dbm_to_watt(spec.modulated_output_dbm);
    const double actual = out.mean_power();
    if (!(actual > 0.0)) throw ConfigError("eam output has zero power, cannot calibrate");
    const double scale = std::sqrt(target / actual);
    for (auto& s : out.samples) s *= scale;
    return out;
}

ComplexEnvelope fiber_propagate(const ComplexEnvelope& field, const FiberSpec& spec) {
    if (spec.length < 0.0) throw ConfigError("fiber length must be >= 0");
    if (spec.attenuation_db_km < 0.0) throw ConfigError("fiber attenuation must be >= 0");
    if (spec.length == 0.0) return field;

    const double lambda2 = spec.wavelength * spec.wavelength;
    const double phase_coeff =
        std::numbers::pi * spec.dispersion_D * lambda2 * spec.length / kSpeedOfLight;
    auto spec_f = fft::forward(field.samples);
    const std::size_t n = spec_f.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double f = fft::bin_frequency(k, n, field.sample_rate);
        spec_f[k] *= std::polar(1.0, phase_coeff * f * f);
    }
    auto y = fft::inverse(spec_f);

    const double att = std::pow(10.0, -spec.attenuation_db_km * (spec.length / 1000.0) / 20.0);
    for (auto& v : y) v *= att;
    return ComplexEnvelope(std::move(y), field.sample_rate, field.wavelength);
}

ComplexEnvelope edfa_amplify(const ComplexEnvelope& field, const EdfaSpec& spec,
                             RngStream& stream) {
    if (spec.gain_db < 0.0) throw ConfigError("edfa gain must be >= 0");
    const double g_field = std::pow(10.0, spec.gain_db / 20.0);
    const double g = std::pow(10.0, spec.gain_db / 10.0);
    const double n_sp = std::pow(10.0, spec.noise_figure_db / 10.0) / 2.0;
    const double nu = kSpeedOfLight / field.wavelength;
    const double ase_psd = n_sp * kPlanck * nu * (g - 1.0); // W/Hz, one polarization
    ComplexEnvelope out = field;
    for (auto& v : out.samples) v *= g_field;
    const double sigma = std::sqrt(ase_psd * field.sample_rate);
    return add_awgn(out, sigma, stream);
}

ComplexEnvelope voa(const ComplexEnvelope& field, double attenuation_db) {
    if (attenuation_db < 0.0) throw ConfigError("voa attenuation must be >= 0");
    ComplexEnvelope out = field;
    const double a = std::pow(10.0, -attenuation_db / 20.0);
    for (auto& v : out.samples) v *= a;
    return out;
}

double voa_attenuation_for_rop(const ComplexEnvelope& field, double target_dbm) {
    const double att = field.mean_power_dbm() - target_dbm;
    if (att < -1e-9)
        throw ConfigError("requested received power exceeds available power");
    return std::max(att, 0.0);
}

} // namespace lwsim
