#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pencils {

/// Exact rational number, always stored in lowest terms with positive
/// denominator. Thin value wrapper around GMP's mpq_class so the rest of
/// the library sees the same scalar interface for every field.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading '-' or '+', base 10).
    static Rational parse(const std::string& text);

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] Rational from_int(long long n) const { return Rational(n); }

    [[nodiscard]] Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(1 / v_);
    }

    Rational operator-() const { return Rational(static_cast<mpq_class>(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    /// "p" when the denominator is 1, otherwise "p/q".
    [[nodiscard]] std::string str() const;

private:
    mpq_class v_;
};

}  // namespace pencils
