#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pencils {

/// Checks that p is an odd prime in (2, 2^31). Trial division is fine at
/// the sizes we accept, and this only runs when a field is configured.
bool is_valid_odd_prime(long long p);

/// Element of the prime field F_p for an odd prime p. The modulus travels
/// with the value; mixing moduli in one operation is a logic error and
/// throws. Values are canonical representatives in [0, p).
class Fp {
public:
    Fp(long long value, long long p) : p_(p) {
        if (p <= 2) throw std::invalid_argument("Fp: modulus must exceed 2");
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    [[nodiscard]] long long value() const { return v_; }
    [[nodiscard]] long long modulus() const { return p_; }

    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] Fp from_int(long long n) const { return Fp(n, p_); }

    [[nodiscard]] Fp inv() const;

    Fp operator-() const { return Fp(p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check(b);
        long long s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check(b);
        long long s = a.v_ - b.v_;
        if (s < 0) s += a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check(b);
        using i128 = __int128;
        return Fp(static_cast<long long>(i128(a.v_) * i128(b.v_) % i128(a.p_)), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    [[nodiscard]] std::string str() const { return std::to_string(v_); }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: modulus mismatch");
    }

    long long v_;
    long long p_;
};

}  // namespace pencils
