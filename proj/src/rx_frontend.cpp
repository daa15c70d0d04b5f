#include "lwsim/rx_frontend.hpp"

#include <cmath>

#include "lwsim/errors.hpp"
#include "lwsim/signal_ops.hpp"

namespace lwsim {

namespace {
constexpr double kElectronCharge = 1.602176634e-19; // C
}

RealWaveform photodetect(const ComplexEnvelope& field, const PhotodiodeSpec& spec,
                         RngStream& stream) {
    if (spec.responsivity <= 0.0 || spec.responsivity > 1.5)
        throw ConfigError("photodiode responsivity must be in (0, 1.5] A/W");
    if (spec.thermal_current_density < 0.0)
        throw ConfigError("thermal current density must be >= 0");

    const double fs = field.sample_rate;
    std::vector<double> current(field.size());
    double mean_power = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double p = std::norm(field.samples[i]);
        mean_power += p;
        current[i] = spec.responsivity * p;
    }
    mean_power /= static_cast<double>(field.size());

    RealWaveform out(std::move(current), fs, Unit::ampere);
    double variance = 0.0;
    if (spec.shot_noise_enabled)
        variance += 2.0 * kElectronCharge * spec.responsivity * mean_power * (fs / 2.0);
    variance += spec.thermal_current_density * spec.thermal_current_density * (fs / 2.0);
    if (variance > 0.0) out = add_awgn(out, std::sqrt(variance), stream);
    return gaussian_lowpass(out, spec.bandwidth_f3db);
}

RealWaveform dso_capture(const RealWaveform& w, const DsoSpec& spec, double baud) {
    if (!(spec.sample_rate > 0.0)) throw ConfigError("dso sample rate must be positive");
    if (w.sample_rate < spec.sample_rate)
        throw ConfigError("dso capture requires input rate >= scope rate");
    if (baud > 0.0 && spec.sample_rate <= 2.0 * baud)
        throw ConfigError("dso sample rate must exceed twice the symbol rate");
    if (spec.record_symbols > 0 && baud > 0.0 &&
        w.duration() * baud + 0.5 < static_cast<double>(spec.record_symbols))
        throw ConfigError("record too short for requested symbol count");

    RealWaveform out = gaussian_lowpass(w, spec.bandwidth_f3db);
    out = resample(out, spec.sample_rate);

    if (spec.quantizer_bits > 0) {
        if (spec.quantizer_bits > 24) throw ConfigError("quantizer depth above 24 bits");
        const double fs_range = spec.full_scale > 0.0 ? spec.full_scale : 4.0 * out.rms();
        const double step = 2.0 * fs_range / std::pow(2.0, spec.quantizer_bits);
        const double top = fs_range - step / 2.0;
        for (auto& v : out.samples) {
            v = step * (std::floor(v / step) + 0.5);
            v = std::clamp(v, -top, top);
        }
    }
    return out;
}

} // namespace lwsim
