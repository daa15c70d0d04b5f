#include "lwsim/signal_ops.hpp"

#include <cmath>
#include <numbers>

#include "lwsim/errors.hpp"
#include "lwsim/fft.hpp"

namespace lwsim {

namespace detail {

namespace {

std::vector<std::complex<double>> to_complex(const std::vector<double>& x) {
    std::vector<std::complex<double>> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    return out;
}

std::vector<double> to_real(const std::vector<std::complex<double>>& x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].real();
    return out;
}

} // namespace

void apply_gaussian_lowpass(std::vector<std::complex<double>>& x, double fs, double f3db_hz) {
    if (!(f3db_hz > 0.0) || !(f3db_hz < fs / 2.0))
        throw ConfigError("filter bandwidth must satisfy 0 < f3dB < fs/2");
    auto spec = fft::forward(x);
    const double c = std::numbers::ln2 / 2.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        const double f = fft::bin_frequency(k, spec.size(), fs) / f3db_hz;
        spec[k] *= std::exp(-c * f * f);
    }
    x = fft::inverse(spec);
}

// Spectrum-domain zero-pad (upsample) or truncate (downsample). The even-N
// Nyquist bin is split when padding and folded when truncating so that real
// inputs stay real.
std::vector<std::complex<double>> resample_vector(const std::vector<std::complex<double>>& x,
                                                  double old_rate, double new_rate) {
    if (!(new_rate > 0.0)) throw ConfigError("resample rate must be positive");
    const std::size_t n = x.size();
    const auto m = static_cast<std::size_t>(
        std::llround(static_cast<double>(n) * new_rate / old_rate));
    if (m < 8) throw ConfigError("resample output would be shorter than 8 samples");
    if (m == n) return x;

    auto spec = fft::forward(x);
    std::vector<std::complex<double>> out(m, 0.0);

    const std::size_t small = std::min(n, m);
    const std::size_t kpos = (small - 1) / 2; // strictly positive bins to copy
    out[0] = spec[0];
    for (std::size_t k = 1; k <= kpos; ++k) {
        out[k] = spec[k];
        out[m - k] = spec[n - k];
    }
    if (small % 2 == 0) {
        const std::size_t h = small / 2;
        if (m > n) {
            // pad: split the old Nyquist bin across +/- new positions
            out[h] = 0.5 * spec[h];
            out[m - h] = 0.5 * spec[h];
        } else {
            // truncate: both old bins at +/- new Nyquist alias onto one bin
            out[h] = spec[h] + spec[n - h];
        }
    }

    auto y = fft::inverse(out);
    const double scale = static_cast<double>(m) / static_cast<double>(n);
    for (auto& v : y) v *= scale;
    return y;
}

void apply_fractional_delay(std::vector<std::complex<double>>& x, double fs, double tau) {
    const double duration = static_cast<double>(x.size()) / fs;
    if (!(std::abs(tau) < duration / 4.0))
        throw ConfigError("fractional delay must satisfy |tau| < duration/4");
    if (tau == 0.0) return;
    auto spec = fft::forward(x);
    const std::size_t n = spec.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (n % 2 == 0 && k == n / 2) {
            // Nyquist bin: symmetric treatment keeps real signals real
            spec[k] *= std::cos(std::numbers::pi * fs * tau);
            continue;
        }
        const double f = fft::bin_frequency(k, n, fs);
        spec[k] *= std::polar(1.0, -2.0 * std::numbers::pi * f * tau);
    }
    x = fft::inverse(spec);
}

} // namespace detail

RealWaveform gaussian_lowpass(const RealWaveform& w, double f3db_hz) {
    auto x = detail::to_complex(w.samples);
    detail::apply_gaussian_lowpass(x, w.sample_rate, f3db_hz);
    return RealWaveform(detail::to_real(x), w.sample_rate, w.unit);
}

ComplexEnvelope gaussian_lowpass(const ComplexEnvelope& w, double f3db_hz) {
    auto x = w.samples;
    detail::apply_gaussian_lowpass(x, w.sample_rate, f3db_hz);
    return ComplexEnvelope(std::move(x), w.sample_rate, w.wavelength);
}

RealWaveform resample(const RealWaveform& w, double new_rate) {
    if (new_rate == w.sample_rate) return w;
    auto y = detail::resample_vector(detail::to_complex(w.samples), w.sample_rate, new_rate);
    return RealWaveform(detail::to_real(y), new_rate, w.unit);
}

ComplexEnvelope resample(const ComplexEnvelope& w, double new_rate) {
    if (new_rate == w.sample_rate) return w;
    auto y = detail::resample_vector(w.samples, w.sample_rate, new_rate);
    return ComplexEnvelope(std::move(y), new_rate, w.wavelength);
}

RealWaveform fractional_delay(const RealWaveform& w, double tau) {
    if (tau == 0.0) return w;
    auto x = detail::to_complex(w.samples);
    detail::apply_fractional_delay(x, w.sample_rate, tau);
    return RealWaveform(detail::to_real(x), w.sample_rate, w.unit);
}

ComplexEnvelope fractional_delay(const ComplexEnvelope& w, double tau) {
    if (tau == 0.0) return w;
    auto x = w.samples;
    detail::apply_fractional_delay(x, w.sample_rate, tau);
    return ComplexEnvelope(std::move(x), w.sample_rate, w.wavelength);
}

RealWaveform add_awgn(const RealWaveform& w, double sigma, RngStream& stream) {
    if (sigma < 0.0) throw ConfigError("noise sigma must be >= 0");
    RealWaveform out = w;
    if (sigma == 0.0) return out;
    for (auto& v : out.samples) v += sigma * stream.gaussian();
    return out;
}

ComplexEnvelope add_awgn(const ComplexEnvelope& w, double sigma, RngStream& stream) {
    if (sigma < 0.0) throw ConfigError("noise sigma must be >= 0");
    ComplexEnvelope out = w;
    if (sigma == 0.0) return out;
    const double s = sigma / std::numbers::sqrt2;
    for (auto& v : out.samples)
        v += std::complex<double>(s * stream.gaussian(), s * stream.gaussian());
    return out;
}

} // namespace lwsim
