#include "lwsim/txchain.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "lwsim/errors.hpp"
#include "lwsim/signal_ops.hpp"

namespace lwsim {

BitSequence prbs15(std::uint16_t register_seed) {
    std::uint32_t state = register_seed & 0x7FFFu;
    if (state == 0) throw ConfigError("prbs15 register seed must be nonzero");
    BitSequence out(kPrbs15Period);
    for (auto& b : out) {
        b = static_cast<std::uint8_t>(state & 1u);
        const std::uint32_t fb = ((state >> 14) ^ (state >> 13)) & 1u;
        state = (state >> 1) | (fb << 14);
    }
    return out;
}

BitSequence rotate(const BitSequence& bits, std::size_t shift) {
    const std::size_t n = bits.size();
    BitSequence out(n);
    shift %= n;
    for (std::size_t i = 0; i < n; ++i) out[i] = bits[(i + shift) % n];
    return out;
}

BitSequence etdm_mux(const BitSequence& a, const BitSequence& b) {
    if (a.size() != b.size()) throw ConfigError("etdm_mux inputs must have equal length");
    BitSequence out(2 * a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[2 * i] = a[i];
        out[2 * i + 1] = b[i];
    }
    return out;
}

std::ptrdiff_t find_rotation(const BitSequence& seq, const BitSequence& of) {
    const std::size_t n = of.size();
    if (seq.size() != n || n < 16) return -1;
    // every nonzero 15-bit window of an m-sequence is unique per period, so
    // a window lookup resolves the rotation in linear time
    auto window = [](const BitSequence& s, std::size_t at) {
        std::uint32_t w = 0;
        for (std::size_t j = 0; j < 15; ++j) w = (w << 1) | s[(at + j) % s.size()];
        return w;
    };
    std::unordered_map<std::uint32_t, std::size_t> pos;
    pos.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pos.emplace(window(of, i), i);
    auto it = pos.find(window(seq, 0));
    if (it == pos.end()) return -1;
    const std::size_t cand = it->second;
    for (std::size_t i = 0; i < n; ++i)
        if (seq[i] != of[(i + cand) % n]) return -1;
    return static_cast<std::ptrdiff_t>(cand);
}

MuxTributaries demux_periodic(const BitSequence& target) {
    const std::size_t n = target.size();
    MuxTributaries t;
    t.even.resize(n);
    t.odd.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.even[i] = target[(2 * i) % n];
        t.odd[i] = target[(2 * i + 1) % n];
    }
    return t;
}

RealWaveform nrz_synthesize(const BitSequence& bits, double baud, unsigned sps,
                            const SelectorSpec& spec, RngStream& stream) {
    if (bits.empty()) throw ConfigError("bit sequence must be non-empty");
    if (sps < 4) throw ConfigError("nrz synthesis needs at least 4 samples per symbol");
    if (!(baud > 0.0)) throw ConfigError("baud rate must be positive");
    if (spec.output_amplitude < 0.25 || spec.output_amplitude > 0.73)
        throw ConfigError("selector output amplitude outside 0.25..0.73 V range");
    if (spec.jitter_rms < 0.0) throw ConfigError("jitter rms must be >= 0");
    if (spec.jitter_rms > 0.25 / baud)
        throw ConfigError("jitter rms above 0.25 UI breaks the edge model");

    const std::size_t nsym = bits.size();
    const std::size_t n = nsym * sps;
    const double fs = baud * static_cast<double>(sps);
    const double rail = spec.output_amplitude / 4.0; // AC-centered: bit-0.5 convention

    std::vector<double> level(nsym);
    for (std::size_t k = 0; k < nsym; ++k) level[k] = bits[k] ? rail : -rail;

    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = level[j / sps];

    if (spec.jitter_rms > 0.0) {
        // move each symbol boundary by an independent Gaussian offset; the
        // grid sample straddling the edge takes the area-weighted mix, which
        // keeps sub-sample edge positions meaningful after the band limit
        const double clamp_t = 0.45 / baud; // keeps boundaries ordered
        for (std::size_t k = 0; k < nsym; ++k) {
            double delta = spec.jitter_rms * stream.gaussian();
            delta = std::clamp(delta, -clamp_t, clamp_t);
            const double prev = level[(k + nsym - 1) % nsym];
            const double cur = level[k];
            if (prev == cur) continue;
            const double edge = static_cast<double>(k * sps) + delta * fs; // in samples
            const auto lo = static_cast<std::ptrdiff_t>(std::floor(edge));
            const double frac = edge - static_cast<double>(lo); // portion still at prev
            const auto nominal = static_cast<std::ptrdiff_t>(k * sps);
            if (delta >= 0.0) {
                for (std::ptrdiff_t j = nominal; j < lo; ++j)
                    w[static_cast<std::size_t>((j + static_cast<std::ptrdiff_t>(n)) %
                                               static_cast<std::ptrdiff_t>(n))] = prev;
            } else {
                for (std::ptrdiff_t j = lo + 1; j < nominal; ++j)
                    w[static_cast<std::size_t>((j + static_cast<std::ptrdiff_t>(n)) %
                                               static_cast<std::ptrdiff_t>(n))] = cur;
            }
            const std::size_t js = static_cast<std::size_t>(
                (lo % static_cast<std::ptrdiff_t>(n) + static_cast<std::ptrdiff_t>(n)) %
                static_cast<std::ptrdiff_t>(n));
            w[js] = prev * frac + cur * (1.0 - frac);
        }
    }

    RealWaveform out(std::move(w), fs, Unit::volt);
    return gaussian_lowpass(out, spec.bandwidth_f3db);
}

RealWaveform driver_amplify(const RealWaveform& w, const DriverSpec& spec) {
    if (!(spec.saturation_level > 0.0)) throw ConfigError("driver saturation level must be positive");
    RealWaveform out = w;
    const double g = std::pow(10.0, spec.gain_db / 20.0);
    for (auto& v : out.samples) v *= g;
    out = gaussian_lowpass(out, spec.bandwidth_f3db);
    for (auto& v : out.samples) v = spec.saturation_level * std::tanh(v / spec.saturation_level);
    return out;
}

} // namespace lwsim
