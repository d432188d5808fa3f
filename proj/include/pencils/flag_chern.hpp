#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pencils/schubert.hpp"

namespace pencils {

/*
 * The Chow ring of the point-line flag bundle over G(1,N):
 *
 *   A(Phi) = A(G(1,N))[zeta] / (zeta^2 - sigma_1 zeta + sigma_{1,1}),
 *
 * so every element has the normal form alpha*zeta + beta. Used to compute
 * Chern classes of the bundles of relative principal parts of a cubic
 * hypersurface along lines, and their pushforwards to the Grassmannian.
 */
class FlagElement {
public:
    FlagElement(ChowElement alpha, ChowElement beta);

    static FlagElement zero(int n);
    static FlagElement from_chow(ChowElement beta);
    static FlagElement zeta(int n);

    [[nodiscard]] const ChowElement& alpha() const { return alpha_; }
    [[nodiscard]] const ChowElement& beta() const { return beta_; }
    [[nodiscard]] int context() const { return alpha_.context(); }
    [[nodiscard]] bool is_zero() const { return alpha_.is_zero() && beta_.is_zero(); }

    FlagElement operator-() const { return FlagElement(-alpha_, -beta_); }
    friend FlagElement operator+(const FlagElement& x, const FlagElement& y) {
        return FlagElement(x.alpha_ + y.alpha_, x.beta_ + y.beta_);
    }
    friend FlagElement operator-(const FlagElement& x, const FlagElement& y) { return x + (-y); }
    friend FlagElement operator*(long long s, const FlagElement& x) {
        return FlagElement(s * x.alpha_, s * x.beta_);
    }
    friend bool operator==(const FlagElement& x, const FlagElement& y) {
        return x.alpha_ == y.alpha_ && x.beta_ == y.beta_;
    }
    friend bool operator!=(const FlagElement& x, const FlagElement& y) { return !(x == y); }

private:
    ChowElement alpha_;
    ChowElement beta_;
};

/// Product in A(Phi), reduced by zeta^2 = sigma_1 zeta - sigma_{1,1}.
FlagElement flag_multiply(const FlagElement& x, const FlagElement& y);

/// Pushforward to the Grassmannian: the coefficient of zeta.
ChowElement pushforward(const FlagElement& x);

/// Top Chern class c_r(E^r) of the bundle of relative principal parts of
/// the cubic, 1 <= r <= 4: the product of (3-2m)*zeta + m*sigma_1 over
/// m = 0 .. r-1, expanded in A(Phi) with N = 5.
FlagElement chern_top_principal_parts(int r);

/// All graded components 0..r of the full Chern polynomial
/// prod_{m=0}^{r-1} (1 + (3-2m)*zeta + m*sigma_1).
std::vector<FlagElement> chern_polynomial_principal_parts(int r);

/// c_4(Sym^3 S*) by the splitting principle, as a polynomial in the
/// elementary symmetric classes of the formal roots: keys (i, j) stand for
/// e1^i e2^j.
std::map<std::pair<int, int>, long long> sym3_dual_elementary();

/// The same class evaluated in A(G(1,5)) at e1 = sigma_1, e2 = sigma_{1,1}.
ChowElement chern_top_sym3_dual();

/// [closure of O7] = fano - 4 * o6; both inputs of codimension 4.
ChowElement orbit7_class(const ChowElement& fano, const ChowElement& o6);

/// Text form, e.g. "6*s[1]*z - 3*s[1,1] @ N=5".
std::string to_text(const FlagElement& x, bool with_context = true);

struct ParsedClass {
    FlagElement value;
    std::optional<int> declared_n;
};

/// Parses class expressions: sums/products of integer literals, Schubert
/// symbols s[a] / s[a,b], the flag class z, and parenthesized groups, with
/// an optional trailing "@ N=k" fixing the context (default_n otherwise).
/// Example: "9*s[1,1]*(2*s[1]*s[1] + s[1,1]) @ N=5". Round-trips to_text
/// exactly. Malformed input throws std::invalid_argument.
ParsedClass parse_class(const std::string& text, int default_n);

}  // namespace pencils
