#pragma once

// Brute-force oracles shared between the unit tests and the acceptance
// suite. They stay independent of the implementation paths they check.

#include <map>
#include <set>

#include "tcone/almost_monomial.hpp"
#include "tcone/semigroup.hpp"
#include "tcone/standard_basis.hpp"

namespace tcone::oracle {

// Leading-ideal oracle: the weight-w slice of the toric ideal is the
// sum-zero subspace of its fiber, so its leading monomials are all fiber
// monomials except the order-minimal one. Minimal generators of LI(I) follow
// by a divisibility sieve.
inline std::vector<Monomial> leading_mingens(const NumericalSemigroup& G,
                                             const MonomialOrder& ord, long long wbound) {
    std::vector<Monomial> lms;
    const int d = G.dim();
    for (long long w = 1; w <= wbound; ++w) {
        auto fs = G.factorizations(w);
        if (fs.size() < 2) continue;
        std::vector<Monomial> ms;
        for (const auto& f : fs) {
            Monomial m = Monomial::unit(d);
            for (int i = 0; i < d; ++i) m.e[i] = static_cast<int>(f.coeffs[i]);
            ms.push_back(m);
        }
        size_t mn = 0;
        for (size_t i = 1; i < ms.size(); ++i)
            if (greater(ord, ms[mn], ms[i])) mn = i;
        for (size_t i = 0; i < ms.size(); ++i)
            if (i != mn) lms.push_back(ms[i]);
    }
    std::vector<Monomial> mins;
    for (size_t i = 0; i < lms.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < lms.size() && !dominated; ++j)
            if (i != j && lms[j].divides(lms[i]) && !(lms[j] == lms[i] && j > i)) dominated = true;
        if (!dominated) mins.push_back(lms[i]);
    }
    std::sort(mins.begin(), mins.end());
    return mins;
}

// Artinian frame for A = k[x,y,z] / (f, y^b, z^c): normal-form monomials
// x^{<a} y^{<b} z^{<c} form a basis, and multiplication by a monomial is an
// injective partial map on classes (normal forms in one rewrite fiber differ
// by multiples of (a, -b', -c'), so x-reduced representatives are unique).
// Annihilators, ideal images and socles are therefore coordinate sets.
struct ArtinianFrame {
    AlmostBinomial f;
    long long b, c;
    std::vector<Monomial> basis;
    std::map<Monomial, int> index;

    ArtinianFrame(AlmostBinomial f_, long long b_, long long c_) : f(f_), b(b_), c(c_) {
        for (long long x = 0; x < f.a; ++x)
            for (long long y = 0; y < b; ++y)
                for (long long z = 0; z < c; ++z) basis.push_back(am::mono(x, y, z));
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    }

    int cls(Monomial m) const {
        m = am::nf_mono(m, f);
        if (m.e[1] >= b || m.e[2] >= c) return -1;
        return index.at(m);
    }

    // Classes reachable from monomial ideal generators.
    std::set<int> image(const std::vector<Monomial>& gens) const {
        std::set<int> out;
        for (const auto& g : gens)
            for (const auto& u : basis) {
                int k = cls(u * g);
                if (k >= 0) out.insert(k);
            }
        return out;
    }

    // Classes killed by multiplication with m.
    std::set<int> annihilator(const Monomial& m) const {
        std::set<int> out;
        for (size_t i = 0; i < basis.size(); ++i)
            if (cls(basis[i] * m) < 0) out.insert(static_cast<int>(i));
        return out;
    }

    // Socle dimension of A / (image of extra).
    long long socle_dim(const std::vector<Monomial>& extra) const {
        std::set<int> u = image(extra);
        long long dim = 0;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (u.count(static_cast<int>(i))) continue;
            bool killed = true;
            for (int v = 0; v < 3 && killed; ++v) {
                int k = cls(basis[i] * Monomial::var(3, v));
                if (k >= 0 && !u.count(k)) killed = false;
            }
            if (killed) ++dim;
        }
        return dim;
    }
};

} // namespace tcone::oracle
