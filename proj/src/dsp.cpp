#include "lwsim/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "lwsim/errors.hpp"
#include "lwsim/fft.hpp"
#include "lwsim/signal_ops.hpp"

namespace lwsim {

namespace {

// Single-bin DFT projection at an arbitrary frequency. The rotating phasor
// is re-anchored with std::polar every block to stop drift on long records.
std::complex<double> project_tone(const std::vector<double>& y, double cycles_per_sample) {
    constexpr std::size_t kBlock = 4096;
    std::complex<double> acc = 0.0;
    const double dphi = -2.0 * std::numbers::pi * cycles_per_sample;
    const std::complex<double> step = std::polar(1.0, dphi);
    for (std::size_t base = 0; base < y.size(); base += kBlock) {
        const std::size_t end = std::min(y.size(), base + kBlock);
        std::complex<double> ph = std::polar(1.0, dphi * static_cast<double>(base));
        for (std::size_t n = base; n < end; ++n) {
            acc += y[n] * ph;
            ph *= step;
        }
    }
    return acc;
}

double wrap_half(double x) {
    double f = x - std::floor(x); // [0,1)
    if (f >= 0.5) f -= 1.0;
    return f;
}

} // namespace

TimingEstimate clock_recover(const RealWaveform& w, double baud) {
    if (!(baud > 0.0)) throw ConfigError("baud rate must be positive");
    if (w.sample_rate <= baud)
        throw ConfigError("clock recovery needs more than one sample per symbol");
    if (w.duration() * baud < 4096.0)
        throw ConfigError("clock recovery needs at least 4096 symbols");

    const double mean = w.mean();
    std::vector<double> y(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double d = w.samples[i] - mean;
        y[i] = d * d;
    }

    const double nu = baud / w.sample_rate;
    const auto line = project_tone(y, nu);

    // floor estimate from bins offset by fractions of the symbol rate
    double floor_acc = 0.0;
    int floor_n = 0;
    for (int m = 2; m <= 9; ++m) {
        for (double sgn : {-1.0, 1.0}) {
            const double off = nu * (1.0 + sgn * static_cast<double>(m) / 64.0);
            floor_acc += std::norm(project_tone(y, off));
            ++floor_n;
        }
    }
    const double floor_ms = floor_acc / static_cast<double>(floor_n);

    TimingEstimate est;
    est.confidence_db = floor_ms > 0.0
                            ? 10.0 * std::log10(std::norm(line) / floor_ms)
                            : (std::norm(line) > 0.0 ? 300.0 : -300.0);
    if (!(est.confidence_db >= 6.0))
        throw DspError("timing recovery failed: clock line confidence below 6 dB");

    // tone maxima sit at eye centers; phase 0 means boundaries on the grid
    est.phase_offset = wrap_half(-std::arg(line) / (2.0 * std::numbers::pi) - 0.5);
    return est;
}

std::vector<double> resample_to_symbols(const RealWaveform& w, double baud,
                                        const TimingEstimate& estimate) {
    const double shift = -(estimate.phase_offset + 0.5) / baud;
    RealWaveform aligned = fractional_delay(w, shift);
    RealWaveform sym = resample(aligned, baud);
    return sym.samples;
}

DfeResult dfe_equalize(const std::vector<double>& x, const DfeConfig& cfg,
                       const BitSequence& reference) {
    if (cfg.n_ff < 1) throw ConfigError("dfe needs at least one feed-forward tap");
    if (cfg.n_fb < 0) throw ConfigError("dfe feedback tap count must be >= 0");
    if (!cfg.frozen) {
        if (!(cfg.step_mu > 0.0 && cfg.step_mu < 1.0))
            throw ConfigError("dfe step size must be in (0, 1)");
        if (cfg.train_symbols < 10 * (cfg.n_ff + cfg.n_fb))
            throw ConfigError("dfe training span must be >= 10x the tap count");
    }
    if (x.size() != reference.size())
        throw ConfigError("dfe reference must match the symbol count");
    if (x.size() < static_cast<std::size_t>(cfg.n_ff + cfg.n_fb + 1))
        throw ConfigError("dfe record shorter than the tap span");

    const std::size_t n = x.size();
    const int nff = cfg.n_ff;
    const int nfb = cfg.n_fb;
    const int delay = (nff - 1) / 2; // cursor sits mid-window to span precursors

    DfeResult res;
    res.ff_taps.assign(static_cast<std::size_t>(nff), 0.0);
    res.fb_taps.assign(static_cast<std::size_t>(nfb), 0.0);
    res.discard = nff + nfb;

    std::vector<double>& w = res.ff_taps;
    std::vector<double>& b = res.fb_taps;

    if (cfg.frozen) {
        w[0] = 1.0;
    } else {
        // start from a pass-through cursor tap scaled to the input power
        const double ms = [&] {
            double acc = 0.0;
            for (double v : x) acc += v * v;
            return acc / static_cast<double>(n);
        }();
        w[static_cast<std::size_t>(delay)] = ms > 0.0 ? 1.0 / std::sqrt(ms) : 1.0;
    }

    double threshold = 0.0;      // running mean of training targets
    double threshold_acc = 0.0;
    std::uint64_t threshold_n = 0;

    constexpr std::size_t kMseWindow = 512;
    double win_acc = 0.0;
    std::size_t win_n = 0;
    int rising = 0;

    auto target_at = [&](std::size_t i) { return reference[i] ? 1.0 : -1.0; };

    auto run_sweep = [&](bool data_aided, bool collect) {
        std::vector<double> d_hist(static_cast<std::size_t>(std::max(nfb, 1)), 0.0);
        std::size_t d_pos = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double y = 0.0;
            for (int k = 0; k < nff; ++k) {
                const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - k;
                if (j >= 0) y += w[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(j)];
            }
            for (int m = 1; m <= nfb; ++m) {
                const std::size_t idx =
                    (d_pos + d_hist.size() - static_cast<std::size_t>(m)) % d_hist.size();
                y -= b[static_cast<std::size_t>(m - 1)] * d_hist[idx];
            }

            const double decision = y > threshold ? 1.0 : -1.0;
            const std::ptrdiff_t cursor = static_cast<std::ptrdiff_t>(i) - delay;
            const bool have_target = cursor >= 0;
            const double target =
                have_target ? target_at(static_cast<std::size_t>(cursor)) : decision;

            double e = 0.0;
            bool adapted = false;
            if (!cfg.frozen) {
                if (data_aided && have_target &&
                    cursor < static_cast<std::ptrdiff_t>(cfg.train_symbols)) {
                    e = target - y;
                    adapted = true;
                    threshold_acc += target;
                    ++threshold_n;
                    threshold = threshold_acc / static_cast<double>(threshold_n);
                } else if (!data_aided) {
                    e = decision - y;
                    adapted = true;
                }
            }
            if (adapted) {
                const double mu_e = cfg.step_mu * e;
                for (int k = 0; k < nff; ++k) {
                    const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - k;
                    if (j >= 0)
                        w[static_cast<std::size_t>(k)] += mu_e * x[static_cast<std::size_t>(j)];
                }
                for (int m = 1; m <= nfb; ++m) {
                    const std::size_t idx =
                        (d_pos + d_hist.size() - static_cast<std::size_t>(m)) % d_hist.size();
                    b[static_cast<std::size_t>(m - 1)] -= mu_e * d_hist[idx];
                }

                win_acc += e * e;
                if (++win_n == kMseWindow) {
                    const double mse = win_acc / static_cast<double>(kMseWindow);
                    if (!res.mse_trace.empty() && mse > 1.2 * res.mse_trace.back())
                        ++rising;
                    else
                        rising = 0;
                    res.mse_trace.push_back(mse);
                    win_acc = 0.0;
                    win_n = 0;
                    if (rising >= 3)
                        throw DspError("dfe adaptation diverged; reduce the step size");
                }
            }

            // feedback history carries the true symbol while training
            const double fed = (data_aided && have_target) ? target : decision;
            if (nfb > 0) {
                d_hist[d_pos] = fed;
                d_pos = (d_pos + 1) % d_hist.size();
            }

            if (collect && i >= static_cast<std::size_t>(res.discard)) {
                res.decided.push_back(decision > 0.0 ? 1 : 0);
                res.soft.push_back(y);
            }
        }
    };

    if (!cfg.frozen)
        for (int p = 0; p < cfg.passes; ++p) run_sweep(true, false);
    run_sweep(false, true);
    return res;
}

namespace {

// Circular correlation of a +/-1 sequence against one reference period,
// for every rotation, via period-folding and an FFT product.
std::vector<double> periodic_correlation(const BitSequence& data, const BitSequence& period) {
    const std::size_t p = period.size();
    std::vector<std::complex<double>> folded(p, 0.0);
    for (std::size_t i = 0; i < data.size(); ++i)
        folded[i % p] += data[i] ? 1.0 : -1.0;
    std::vector<std::complex<double>> ref(p);
    for (std::size_t i = 0; i < p; ++i) ref[i] = period[i] ? 1.0 : -1.0;

    // corr(s) = sum_m folded[m] * ref[(m+s) mod p]
    auto f = fft::forward(folded);
    auto r = fft::forward(ref);
    for (std::size_t k = 0; k < p; ++k) f[k] = std::conj(f[k]) * r[k];
    auto c = fft::inverse(f);
    std::vector<double> out(p);
    for (std::size_t s = 0; s < p; ++s) out[s] = c[s].real();
    return out;
}

} // namespace

Alignment align_bits(const BitSequence& decided, const BitSequence& reference_period) {
    if (decided.empty() || reference_period.empty())
        throw ConfigError("alignment inputs must be non-empty");
    auto corr = periodic_correlation(decided, reference_period);
    Alignment best;
    double best_abs = -1.0;
    for (std::size_t s = 0; s < corr.size(); ++s) {
        if (std::abs(corr[s]) > best_abs) {
            best_abs = std::abs(corr[s]);
            best.offset = s;
            best.inverted = corr[s] < 0.0;
            best.correlation = std::abs(corr[s]) / static_cast<double>(decided.size());
        }
    }
    return best;
}

Alignment align_symbols(const std::vector<double>& symbols,
                        const BitSequence& reference_period) {
    double mean = 0.0;
    for (double v : symbols) mean += v;
    mean /= static_cast<double>(symbols.size());
    BitSequence sliced(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) sliced[i] = symbols[i] > mean ? 1 : 0;
    return align_bits(sliced, reference_period);
}

namespace {

// Regularized incomplete beta via Lentz continued fraction.
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-14;
    constexpr double kFpMin = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

double ibeta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

// Inverse of I_x(a,b) by bisection.
double ibeta_inv(double a, double b, double target) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ibeta(a, b, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

void binomial_interval_95(std::uint64_t k, std::uint64_t n, double& low, double& high) {
    if (n == 0) throw ConfigError("binomial interval needs n > 0");
    if (k > n) throw ConfigError("binomial interval needs k <= n");
    constexpr double kAlpha = 0.05;
    const auto kn = static_cast<double>(k);
    const auto nn = static_cast<double>(n);
    low = (k == 0) ? 0.0 : ibeta_inv(kn, nn - kn + 1.0, kAlpha / 2.0);
    if (k == n) {
        high = 1.0;
    } else if (k == 0) {
        high = 3.0 / nn; // rule of three
    } else {
        high = ibeta_inv(kn + 1.0, nn - kn, 1.0 - kAlpha / 2.0);
    }
}

BerRecord count_errors(const BitSequence& decided, const BitSequence& reference_period,
                       std::size_t guard_bits) {
    if (decided.size() <= 2 * guard_bits + 16)
        throw ConfigError("too few decided bits for error counting");

    BitSequence body(decided.begin() + static_cast<std::ptrdiff_t>(guard_bits),
                     decided.end() - static_cast<std::ptrdiff_t>(guard_bits));
    const Alignment align = align_bits(body, reference_period);

    BerRecord rec;
    rec.bits = body.size();
    rec.alignment_offset = align.offset;
    rec.polarity_inverted = align.inverted;
    rec.reportable = rec.bits >= 100000;

    if (align.correlation < 0.2) {
        rec.sync_failed = true;
        rec.ber = 0.5;
        rec.errors = rec.bits / 2;
        rec.ci_low = 0.0;
        rec.ci_high = 1.0;
        rec.reliable = false;
        return rec;
    }

    const std::size_t p = reference_period.size();
    std::uint64_t errors = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        std::uint8_t ref = reference_period[(i + align.offset) % p];
        if (align.inverted) ref ^= 1;
        errors += (body[i] != ref) ? 1u : 0u;
    }
    rec.errors = errors;
    rec.ber = static_cast<double>(errors) / static_cast<double>(rec.bits);
    binomial_interval_95(rec.errors, rec.bits, rec.ci_low, rec.ci_high);
    rec.reliable = errors >= 10;
    return rec;
}

} // namespace lwsim
