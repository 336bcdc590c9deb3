#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toral {

// Thrown when user-supplied data fails validation (CLI maps this to exit 2).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a mathematically-impossible state is reached (CLI exit 3).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

// splitmix64: small deterministic generator, identical output on every
// platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// x with (x * a) % m == g == gcd(a, m); a may be any integer, m > 0.
inline long long mod_inverse(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (r != 1) throw internal_error("mod_inverse: arguments not coprime");
    return ((t % m) + m) % m;
}

} // namespace toral
