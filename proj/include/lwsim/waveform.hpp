#ifndef LWSIM_WAVEFORM_HPP
#define LWSIM_WAVEFORM_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace lwsim {

enum class Unit : int {
    dimensionless = 0,
    volt = 1,
    ampere = 2,
};

// Real-valued electrical signal on a uniform time grid.
struct RealWaveform {
    std::vector<double> samples;
    double sample_rate = 0.0; // Sa/s
    Unit unit = Unit::dimensionless;

    RealWaveform() = default;
    RealWaveform(std::vector<double> s, double rate, Unit u = Unit::dimensionless);

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
    double mean() const;
    double rms() const;
    double mean_square() const;
};

// Complex optical field envelope; |sample|^2 is instantaneous power in watts.
struct ComplexEnvelope {
    std::vector<std::complex<double>> samples;
    double sample_rate = 0.0; // Sa/s
    double wavelength = 0.0;  // m, reference carrier

    ComplexEnvelope() = default;
    ComplexEnvelope(std::vector<std::complex<double>> s, double rate, double wl);

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
    double mean_power() const;       // W
    double mean_power_dbm() const;
};

double watt_to_dbm(double watts);
double dbm_to_watt(double dbm);

} // namespace lwsim

#endif
