#include "pencils/schubert.hpp"

#include <stdexcept>

#include "pencils/ring.hpp"

namespace pencils {

Partition2 dual_partition(Partition2 p, int n) {
    if (!p.fits_box(n)) throw std::invalid_argument("dual_partition: partition outside box");
    return {n - 1 - p.b, n - 1 - p.a};
}

ChowElement ChowElement::zero(int n) {
    if (n < 2) throw std::invalid_argument("ChowElement: need N >= 2");
    return ChowElement(n);
}

ChowElement ChowElement::basis(Partition2 p, int n) {
    ChowElement x = zero(n);
    if (!p.fits_box(n)) throw std::invalid_argument("ChowElement: partition outside box");
    x.terms_.emplace(p, 1);
    return x;
}

std::optional<int> ChowElement::codim() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.codim();
}

long long ChowElement::coefficient(Partition2 p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void ChowElement::add_term(Partition2 p, long long c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.codim() != p.codim())
        throw std::invalid_argument("ChowElement: mixed grading");
    const auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ChowElement::check_context(const ChowElement& x, const ChowElement& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("ChowElement: context mismatch");
}

ChowElement ChowElement::operator-() const {
    ChowElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

ChowElement operator+(const ChowElement& x, const ChowElement& y) {
    ChowElement::check_context(x, y);
    const auto cx = x.codim();
    const auto cy = y.codim();
    if (cx && cy && *cx != *cy) throw std::invalid_argument("ChowElement: mixed grading");
    ChowElement r = x;
    for (const auto& [p, c] : y.terms_) r.add_term(p, c);
    return r;
}

ChowElement operator-(const ChowElement& x, const ChowElement& y) { return x + (-y); }

ChowElement operator*(long long s, const ChowElement& x) {
    ChowElement r = ChowElement::zero(x.context());
    if (s == 0) return r;
    for (const auto& [p, c] : x.terms()) r.add_term(p, s * c);
    return r;
}

bool operator==(const ChowElement& x, const ChowElement& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
}

ChowElement pieri(const ChowElement& x, int h) {
    if (h < 0) throw std::invalid_argument("pieri: negative index");
    if (h == 0) return x;
    const int n = x.context();
    ChowElement r = ChowElement::zero(n);
    for (const auto& [p, c] : x.terms()) {
        // Horizontal strips: a' >= a >= b' >= b with a'+b' = a+b+h, a' <= N-1.
        for (int bp = p.b; bp <= p.a; ++bp) {
            const int ap = p.a + p.b + h - bp;
            if (ap < p.a || ap > n - 1) continue;
            r.add_term({ap, bp}, c);
        }
    }
    return r;
}

ChowElement multiply(const ChowElement& x, const ChowElement& y) {
    if (x.context() != y.context())
        throw std::invalid_argument("ChowElement: context mismatch");
    const int n = x.context();
    ChowElement r = ChowElement::zero(n);
    for (const auto& [p, c] : y.terms()) {
        ChowElement part = pieri(pieri(x, p.b), p.a);
        if (p.b >= 1) part = part - pieri(pieri(x, p.b - 1), p.a + 1);
        r = r + c * part;
    }
    return r;
}

long long integral(const ChowElement& x) {
    const int n = x.context();
    return x.coefficient({n - 1, n - 1});
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 0; i < k; ++i) {
        r = r * (n - i);
        r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

}  // namespace

long long schubert_degree(int a, int b, int n) {
    if (!Partition2{a, b}.fits_box(n)) throw std::invalid_argument("schubert_degree: outside box");
    const long long num = binomial(2 * n - 2 - a - b, n - 1 - b) * (a - b + 1);
    if (num % (n - b) != 0) throw internal_error("schubert_degree: divisibility failed");
    return num / (n - b);
}

long long plucker_degree(const ChowElement& x) {
    long long total = 0;
    for (const auto& [p, c] : x.terms()) total += c * schubert_degree(p.a, p.b, x.context());
    return total;
}

std::string to_text(const ChowElement& x, bool with_context) {
    std::string out;
    if (x.is_zero()) {
        out = "0";
    } else {
        // Print with a descending so e.g. s[2] precedes s[1,1].
        for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
            const auto& [p, c] = *it;
            const long long mag = c < 0 ? -c : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string sym = p == Partition2{0, 0}
                                  ? "s[0]"
                                  : "s[" + std::to_string(p.a) +
                                        (p.b > 0 ? "," + std::to_string(p.b) : "") + "]";
            if (mag != 1)
                out += std::to_string(mag) + "*" + sym;
            else
                out += sym;
        }
    }
    if (with_context && !x.is_zero()) out += " @ N=" + std::to_string(x.context());
    return out;
}

}  // namespace pencils
