#pragma once

#include <cstdint>
#include <ostream>

namespace grasscat {

// Prime field of order 2^61 - 1. Coefficient ring for all module computations.
class Fp {
public:
    static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

    constexpr Fp() = default;
    constexpr Fp(std::int64_t v) : v_(reduce_signed(v)) {}

    static constexpr Fp raw(std::uint64_t v) { Fp r; r.v_ = v; return r; }
    constexpr std::uint64_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Fp operator+(Fp a, Fp b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= P) s -= P;
        return raw(s);
    }
    friend constexpr Fp operator-(Fp a, Fp b) {
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_);
    }
    constexpr Fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
    friend constexpr Fp operator*(Fp a, Fp b) {
        unsigned __int128 m = static_cast<unsigned __int128>(a.v_) * b.v_;
        std::uint64_t lo = static_cast<std::uint64_t>(m) & P;
        std::uint64_t hi = static_cast<std::uint64_t>(m >> 61);
        std::uint64_t s = lo + hi;
        if (s >= P) s -= P;
        return raw(s);
    }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    Fp pow(std::uint64_t e) const {
        Fp b = *this, r = 1;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    Fp inv() const { return pow(P - 2); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    // Symmetric representative, handy for printing small integers.
    std::int64_t lift() const {
        return v_ > P / 2 ? -static_cast<std::int64_t>(P - v_) : static_cast<std::int64_t>(v_);
    }

    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.lift(); }

private:
    static constexpr std::uint64_t reduce_signed(std::int64_t v) {
        if (v >= 0) return static_cast<std::uint64_t>(v) % P;
        std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % P;
        return P - 1 - m;
    }
    std::uint64_t v_ = 0;
};

inline bool is_zero(Fp a) { return a.is_zero(); }
inline Fp field_inverse(Fp a) { return a.inv(); }

}  // namespace grasscat
