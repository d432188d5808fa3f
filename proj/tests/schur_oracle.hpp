#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "pencils/schubert.hpp"

/*
 * Independent check model for products in A(G(1,N)): Schubert classes are
 * realized as two-variable Schur polynomials, multiplied as honest
 * polynomials in Z[x,y], re-expanded in the Schur basis by leading-term
 * stripping, and truncated to the 2 x (N-1) box. No Pieri code involved.
 */
namespace schur_oracle {

using Mono = std::pair<int, int>;
using Poly2 = std::map<Mono, long long>;

// s_{(a,b)}(x,y) = sum of x^i y^{a+b-i} for b <= i <= a.
inline Poly2 schur2(int a, int b) {
    Poly2 p;
    for (int i = b; i <= a; ++i) p[{i, a + b - i}] += 1;
    return p;
}

inline Poly2 mul(const Poly2& f, const Poly2& g) {
    Poly2 r;
    for (const auto& [mf, cf] : f)
        for (const auto& [mg, cg] : g) {
            const Mono m{mf.first + mg.first, mf.second + mg.second};
            r[m] += cf * cg;
            if (r[m] == 0) r.erase(m);
        }
    return r;
}

inline std::map<pencils::Partition2, long long> expand_truncated(Poly2 p, int n) {
    std::map<pencils::Partition2, long long> out;
    while (!p.empty()) {
        const auto lead = std::prev(p.end());
        const auto [a, b] = lead->first;
        const long long c = lead->second;
        if (a < b) throw std::runtime_error("expand_truncated: polynomial is not symmetric");
        for (const auto& [m, cs] : schur2(a, b)) {
            p[m] -= c * cs;
            if (p[m] == 0) p.erase(m);
        }
        if (a <= n - 1) out[pencils::Partition2{a, b}] += c;
    }
    return out;
}

inline std::map<pencils::Partition2, long long> product(pencils::Partition2 x,
                                                        pencils::Partition2 y, int n) {
    return expand_truncated(mul(schur2(x.a, x.b), schur2(y.a, y.b)), n);
}

}  // namespace schur_oracle
