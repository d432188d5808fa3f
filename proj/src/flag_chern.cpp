#include "pencils/flag_chern.hpp"

#include <stdexcept>

#include "pencils/ring.hpp"

namespace pencils {

namespace {

constexpr int kHypersurfaceDegree = 3;  // the cubic Delta
constexpr int kFlagN = 5;

ChowElement sigma(int a, int b, int n) { return ChowElement::basis({a, b}, n); }

}  // namespace

FlagElement::FlagElement(ChowElement alpha, ChowElement beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.context() != beta_.context())
        throw std::invalid_argument("FlagElement: context mismatch");
    const auto ca = alpha_.codim();
    const auto cb = beta_.codim();
    if (ca && cb && *ca + 1 != *cb)
        throw std::invalid_argument("FlagElement: grading mismatch between components");
}

FlagElement FlagElement::zero(int n) {
    return FlagElement(ChowElement::zero(n), ChowElement::zero(n));
}

FlagElement FlagElement::from_chow(ChowElement beta) {
    ChowElement a = ChowElement::zero(beta.context());
    return FlagElement(std::move(a), std::move(beta));
}

FlagElement FlagElement::zeta(int n) {
    return FlagElement(ChowElement::one(n), ChowElement::zero(n));
}

FlagElement flag_multiply(const FlagElement& x, const FlagElement& y) {
    if (x.context() != y.context())
        throw std::invalid_argument("flag_multiply: context mismatch");
    const int n = x.context();
    const ChowElement aa = multiply(x.alpha(), y.alpha());
    ChowElement alpha = multiply(aa, sigma(1, 0, n)) + multiply(x.alpha(), y.beta()) +
                        multiply(y.alpha(), x.beta());
    ChowElement beta = multiply(x.beta(), y.beta()) - multiply(aa, sigma(1, 1, n));
    return FlagElement(std::move(alpha), std::move(beta));
}

ChowElement pushforward(const FlagElement& x) { return x.alpha(); }

namespace {

/// (3-2m)*zeta + m*sigma_1: the first Chern class of the m-th graded piece
/// of the principal-parts filtration, O(3) twisted by Sym^m of the relative
/// cotangent line.
FlagElement jet_factor(int m) {
    const long long twist = kHypersurfaceDegree - 2 * m;
    return twist * FlagElement::zeta(kFlagN) +
           FlagElement::from_chow(static_cast<long long>(m) * sigma(1, 0, kFlagN));
}

}  // namespace

FlagElement chern_top_principal_parts(int r) {
    if (r < 1 || r > 4) throw std::invalid_argument("chern_top_principal_parts: r must be 1..4");
    FlagElement acc = jet_factor(0);
    for (int m = 1; m < r; ++m) acc = flag_multiply(acc, jet_factor(m));
    return acc;
}

std::vector<FlagElement> chern_polynomial_principal_parts(int r) {
    if (r < 1 || r > 4)
        throw std::invalid_argument("chern_polynomial_principal_parts: r must be 1..4");
    std::vector<FlagElement> comp{FlagElement::from_chow(ChowElement::one(kFlagN))};
    for (int m = 0; m < r; ++m) {
        const FlagElement t = jet_factor(m);
        std::vector<FlagElement> next(comp.size() + 1, FlagElement::zero(kFlagN));
        for (std::size_t k = 0; k < comp.size(); ++k) {
            next[k] = next[k] + comp[k];
            next[k + 1] = next[k + 1] + flag_multiply(comp[k], t);
        }
        comp = std::move(next);
    }
    return comp;
}

namespace {

/// Dense homogeneous polynomial in two formal roots: c[k] is the
/// coefficient of alpha^(d-k) beta^k.
using RootPoly = std::vector<long long>;

RootPoly root_mul(const RootPoly& f, const RootPoly& g) {
    RootPoly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    return r;
}

}  // namespace

std::map<std::pair<int, int>, long long> sym3_dual_elementary() {
    // prod_{i=0}^{3} (i*alpha + (3-i)*beta), the top Chern class of
    // Sym^3 of a rank-2 bundle with Chern roots alpha, beta.
    RootPoly prod{1};
    for (int i = 0; i <= kHypersurfaceDegree; ++i)
        prod = root_mul(prod, RootPoly{static_cast<long long>(i),
                                       static_cast<long long>(kHypersurfaceDegree - i)});

    // Rewrite in the elementary symmetric basis e1 = alpha + beta,
    // e2 = alpha*beta by repeatedly stripping the lex-leading term.
    std::map<std::pair<int, int>, long long> out;
    const int d = static_cast<int>(prod.size()) - 1;
    while (true) {
        int lead = -1;
        for (int k = 0; k <= d; ++k)
            if (prod[k] != 0) {
                lead = k;
                break;
            }
        if (lead < 0) break;
        const int p = d - lead;
        const int q = lead;
        if (p < q) throw internal_error("sym3_dual_elementary: asymmetric remainder");
        const long long c = prod[lead];
        out[{p - q, q}] += c;
        // Subtract c * e1^(p-q) * e2^q, whose expansion is
        // c * (alpha+beta)^(p-q) * (alpha*beta)^q.
        RootPoly term{1};
        for (int i = 0; i < p - q; ++i) term = root_mul(term, RootPoly{1, 1});
        for (std::size_t i = 0; i < term.size(); ++i) prod[q + i] -= c * term[i];
    }
    return out;
}

ChowElement chern_top_sym3_dual() {
    const ChowElement e1 = sigma(1, 0, kFlagN);
    const ChowElement e2 = sigma(1, 1, kFlagN);
    ChowElement acc = ChowElement::zero(kFlagN);
    for (const auto& [pw, c] : sym3_dual_elementary()) {
        ChowElement term = ChowElement::one(kFlagN);
        for (int i = 0; i < pw.first; ++i) term = multiply(term, e1);
        for (int j = 0; j < pw.second; ++j) term = multiply(term, e2);
        acc = acc + c * term;
    }
    return acc;
}

ChowElement orbit7_class(const ChowElement& fano, const ChowElement& o6) {
    const auto cf = fano.codim();
    const auto c6 = o6.codim();
    if ((cf && *cf != 4) || (c6 && *c6 != 4))
        throw std::invalid_argument("orbit7_class: inputs must have codimension 4");
    return fano - 4 * o6;
}

std::string to_text(const FlagElement& x, bool with_context) {
    if (x.is_zero()) return "0";
    std::string out;
    const auto emit = [&out](long long c, const std::string& sym) {
        const long long mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += std::to_string(mag);
            if (!sym.empty()) out += "*";
        } else if (sym.empty()) {
            out += "1";
            return;
        }
        out += sym;
    };
    for (auto it = x.alpha().terms().rbegin(); it != x.alpha().terms().rend(); ++it) {
        const auto& [p, c] = *it;
        std::string sym;
        if (p != Partition2{0, 0})
            sym = "s[" + std::to_string(p.a) + (p.b > 0 ? "," + std::to_string(p.b) : "") +
                  "]*z";
        else
            sym = "z";
        emit(c, sym);
    }
    for (auto it = x.beta().terms().rbegin(); it != x.beta().terms().rend(); ++it) {
        const auto& [p, c] = *it;
        std::string sym = "s[" + std::to_string(p.a) +
                          (p.b > 0 ? "," + std::to_string(p.b) : "") + "]";
        if (p == Partition2{0, 0}) sym = "s[0]";
        emit(c, sym);
    }
    if (with_context) out += " @ N=" + std::to_string(x.context());
    return out;
}

}  // namespace pencils
