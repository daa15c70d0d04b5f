#ifndef LWSIM_RNG_HPP
#define LWSIM_RNG_HPP

#include <cstdint>
#include <string_view>

namespace lwsim {

// Counter-based random stream. Output i is mix64(key + i*PHI), i.e. the
// splitmix64 sequence, so a stream is a pure function of (key, counter).
// Child streams are keyed by the FNV-1a hash of their name folded into the
// parent key; adding a new named stage therefore never perturbs the draws
// of existing stages.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    RngStream child(std::string_view name) const;

    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double gaussian();  // standard normal (Box-Muller)

    std::uint64_t key() const { return key_; }

private:
    RngStream(std::uint64_t key, int);

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace lwsim

#endif
