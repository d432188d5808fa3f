#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pencils {

/*
 * The Chow ring of the Grassmannian G(1,N) of lines in P^N, in the Schubert
 * basis sigma_{a,b} indexed by two-row partitions inside a 2 x (N-1) box.
 * Coefficients are integers; elements are graded and homogeneity is
 * enforced: adding nonzero pieces of different codimension is an error
 * rather than a silent mixed sum.
 */

struct Partition2 {
    int a = 0;
    int b = 0;

    [[nodiscard]] int codim() const { return a + b; }
    [[nodiscard]] bool fits_box(int n) const { return n - 1 >= a && a >= b && b >= 0; }

    friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

/// Poincare-dual partition inside the 2 x (N-1) box.
Partition2 dual_partition(Partition2 p, int n);

class ChowElement {
public:
    static ChowElement zero(int n);
    static ChowElement basis(Partition2 p, int n);
    static ChowElement one(int n) { return basis({0, 0}, n); }

    [[nodiscard]] int context() const { return n_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Common codimension of all supported partitions; nullopt for zero.
    [[nodiscard]] std::optional<int> codim() const;
    [[nodiscard]] const std::map<Partition2, long long>& terms() const { return terms_; }
    [[nodiscard]] long long coefficient(Partition2 p) const;

    ChowElement operator-() const;
    friend ChowElement operator+(const ChowElement& x, const ChowElement& y);
    friend ChowElement operator-(const ChowElement& x, const ChowElement& y);
    friend ChowElement operator*(long long s, const ChowElement& x);
    friend bool operator==(const ChowElement& x, const ChowElement& y);
    friend bool operator!=(const ChowElement& x, const ChowElement& y) { return !(x == y); }

private:
    explicit ChowElement(int n) : n_(n) {}
    void add_term(Partition2 p, long long c);
    static void check_context(const ChowElement& x, const ChowElement& y);

    int n_;
    std::map<Partition2, long long> terms_;

    friend ChowElement pieri(const ChowElement& x, int h);
};

/// Multiplication by sigma_h via the two-row horizontal-strip Pieri rule;
/// partitions leaving the box are discarded.
ChowElement pieri(const ChowElement& x, int h);

/// Full product, bilinear via the two-row Giambelli identity
/// sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}.
ChowElement multiply(const ChowElement& x, const ChowElement& y);

/// Coefficient of the point class sigma_{N-1,N-1}.
long long integral(const ChowElement& x);

/// Degree of the Schubert cycle Sigma_{a,b} under the Pluecker embedding:
/// binom(2N-2-a-b, N-1-b) * (a-b+1) / (N-b), asserted to divide exactly.
long long schubert_degree(int a, int b, int n);

/// Degree of a cycle with the given homogeneous class.
long long plucker_degree(const ChowElement& x);

/// Canonical text form, e.g. "6*s[2] + 9*s[1,1] @ N=5"; without the
/// context suffix when with_context is false. Zero prints as "0".
std::string to_text(const ChowElement& x, bool with_context = true);

}  // namespace pencils
