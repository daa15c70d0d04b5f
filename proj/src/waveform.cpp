#include "lwsim/waveform.hpp"

#include <cmath>

#include "lwsim/errors.hpp"

namespace lwsim {

RealWaveform::RealWaveform(std::vector<double> s, double rate, Unit u)
    : samples(std::move(s)), sample_rate(rate), unit(u) {
    if (!(sample_rate > 0.0))
        throw ConfigError("waveform sample rate must be positive");
    if (samples.empty())
        throw ConfigError("waveform must be non-empty");
}

double RealWaveform::mean() const {
    double acc = 0.0;
    for (double v : samples) acc += v;
    return acc / static_cast<double>(samples.size());
}

double RealWaveform::mean_square() const {
    double acc = 0.0;
    for (double v : samples) acc += v * v;
    return acc / static_cast<double>(samples.size());
}

double RealWaveform::rms() const { return std::sqrt(mean_square()); }

ComplexEnvelope::ComplexEnvelope(std::vector<std::complex<double>> s, double rate, double wl)
    : samples(std::move(s)), sample_rate(rate), wavelength(wl) {
    if (!(sample_rate > 0.0))
        throw ConfigError("envelope sample rate must be positive");
    if (samples.empty())
        throw ConfigError("envelope must be non-empty");
}

double ComplexEnvelope::mean_power() const {
    double acc = 0.0;
    for (const auto& v : samples) acc += std::norm(v);
    return acc / static_cast<double>(samples.size());
}

double ComplexEnvelope::mean_power_dbm() const { return watt_to_dbm(mean_power()); }

double watt_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

} // namespace lwsim
