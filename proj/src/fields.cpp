#include "pencils/prime_field.hpp"
#include "pencils/rational.hpp"

namespace pencils {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    std::string body = text;
    if (body[0] == '+') body.erase(0, 1);
    const auto ok_part = [](const std::string& s, bool sign_ok) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && s[0] == '-') i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = body.find('/');
    const std::string num = body.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!ok_part(num, true) || !ok_part(den, false) || den == "0")
        throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    mpq_class v{mpz_class(num), mpz_class(den)};
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool is_valid_odd_prime(long long p) {
    if (p <= 2 || p >= (1LL << 31) || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Fp Fp::inv() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Extended Euclid on (v, p); p is prime so the gcd is 1.
    long long r0 = v_, r1 = p_;
    long long s0 = 1, s1 = 0;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("Fp: modulus is not prime");
    return Fp(s0, p_);
}

}  // namespace pencils
