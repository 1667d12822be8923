#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tcone/monomial.hpp"

namespace tcone {

enum class Cmp { Less, Equal, Greater };

// Monomial orders used throughout:
//  - NegDegRevLex: local (degree-anticompatible) order; smaller total degree
//    compares greater, ties broken by reverse lexicographic over perm.
//  - Lex: global lexicographic over perm (used by the 4-variable elimination
//    computations).
// perm[0] is the most significant variable; the revlex scan starts from
// perm.back().
struct MonomialOrder {
    enum class Kind { NegDegRevLex, Lex };

    Kind kind = Kind::NegDegRevLex;
    std::vector<int> perm;

    static MonomialOrder negdegrevlex(std::vector<int> p) {
        return MonomialOrder{Kind::NegDegRevLex, std::move(p)};
    }

    static MonomialOrder lex(std::vector<int> p) { return MonomialOrder{Kind::Lex, std::move(p)}; }

    // Defaults for semigroup work: plain negdegrevlex on (x1,...,xd) for
    // d <= 3, negdegrevlex on the reversed variables (xd,...,x1) otherwise;
    // both are nice in x1, the latter also nice in x2 on x1-free binomials.
    static MonomialOrder default_local(int nvars) {
        std::vector<int> p(nvars);
        for (int i = 0; i < nvars; ++i) p[i] = (nvars >= 4) ? nvars - 1 - i : i;
        return negdegrevlex(std::move(p));
    }

    int nvars() const { return static_cast<int>(perm.size()); }

    bool operator==(const MonomialOrder&) const = default;
};

inline Cmp compare(const MonomialOrder& ord, const Monomial& a, const Monomial& b) {
    require(a.nvars == b.nvars && a.nvars == ord.nvars(), errc::dimension_mismatch,
            "monomials and order must share the variable count");
    if (ord.kind == MonomialOrder::Kind::NegDegRevLex) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? Cmp::Greater : Cmp::Less;
        for (int k = ord.nvars() - 1; k >= 0; --k) {
            int v = ord.perm[k];
            if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }
    for (int k = 0; k < ord.nvars(); ++k) {
        int v = ord.perm[k];
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
}

inline bool greater(const MonomialOrder& ord, const Monomial& a, const Monomial& b) {
    return compare(ord, a, b) == Cmp::Greater;
}

// A binomial x^alpha - x^beta admits an admissible weight vector
// 0 < w1 < ... < wd with equal weights on both sides iff, writing
// s_j = sum_{i>=j} (alpha_i - beta_i), either all s_j vanish or the suffix
// sums take both signs. (Write w_i = d_1 + ... + d_i with d_j > 0; the weight
// gap is sum_j d_j s_j.)
inline bool generically_balanceable(const Monomial& a, const Monomial& b) {
    bool pos = false, neg = false, allzero = true;
    int s = 0;
    for (int j = a.nvars - 1; j >= 0; --j) {
        s += a.e[j] - b.e[j];
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (s != 0) allzero = false;
    }
    return allzero || (pos && neg);
}

struct NiceCheckResult {
    bool nice = true;
    std::optional<std::pair<Monomial, Monomial>> counterexample;
};

// Verifies the "nice in x_i" implication over all monomial pairs with
// exponents <= bound:
//   deg a < deg b, or (a - b balanced and b(i) > 0)  ==>  a > b.
// Balanced means equal degree, disjoint supports, and equal weights; with no
// weight vector given, a pair counts as balanced when some admissible weight
// vector balances it. frozen lists variables whose presence on either side
// exempts the pair ("first nice in x1, then nice in x2" checks x2 only on
// x1-free binomials).
inline NiceCheckResult check_nice(const MonomialOrder& ord, int var, int bound,
                                  std::span<const long long> weights = {},
                                  std::span<const int> frozen = {}) {
    require(bound >= 1, errc::invalid_input, "bound must be >= 1");
    const int nv = ord.nvars();
    std::vector<Monomial> box;
    {
        Monomial cur = Monomial::unit(nv);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == nv) {
                box.push_back(cur);
                return;
            }
            for (int v = 0; v <= bound; ++v) {
                cur.e[i] = v;
                self(self, i + 1);
            }
            cur.e[i] = 0;
        };
        rec(rec, 0);
    }
    auto uses_frozen = [&](const Monomial& m) {
        for (int f : frozen)
            if (m.e[f] > 0) return true;
        return false;
    };
    for (const Monomial& a : box) {
        for (const Monomial& b : box) {
            if (a == b) continue;
            bool locality = a.degree() < b.degree();
            bool balanced_clause = false;
            if (!locality && b.e[var] > 0 && a.degree() == b.degree() &&
                a.disjoint_support(b) && !uses_frozen(a) && !uses_frozen(b)) {
                if (weights.empty())
                    balanced_clause = generically_balanceable(a, b);
                else
                    balanced_clause = a.weight(weights) == b.weight(weights);
            }
            if ((locality || balanced_clause) && compare(ord, a, b) != Cmp::Greater)
                return {false, std::make_pair(a, b)};
        }
    }
    return {true, std::nullopt};
}

// Fast certificates used by the basis engine.
//  - A negdegrevlex order whose least significant non-frozen revlex position
//    is x_i places the x_i-free side of any balanced binomial first,
//    independent of the weights: frozen positions agree on both sides, so the
//    revlex scan hits x_i first with difference -beta(i) < 0.
//  - Plain negdegrevlex on (x1,x2,x3) is nice in x1 for every increasing
//    weight vector: a balanced pair with x1 on the beta side must be
//    x2^a vs x1^b x3^c with c > 0 (the other support splits cannot carry
//    equal weights), and the scan sees -c < 0 at x3.
// Other orders fall back to the bounded exhaustive check.
inline bool order_is_nice_in(const MonomialOrder& ord, int var, int bound,
                             std::span<const long long> weights = {},
                             std::span<const int> frozen = {}) {
    auto is_frozen = [&](int v) {
        for (int f : frozen)
            if (f == v) return true;
        return false;
    };
    if (ord.kind == MonomialOrder::Kind::NegDegRevLex) {
        for (int k = ord.nvars() - 1; k >= 0; --k) {
            int v = ord.perm[k];
            if (is_frozen(v)) continue;
            if (v == var) return true;
            break;
        }
        if (ord.nvars() == 3 && var == 0 && frozen.empty() &&
            ord.perm == std::vector<int>{0, 1, 2})
            return true;
    }
    return check_nice(ord, var, std::min(bound, 7), weights, frozen).nice;
}

} // namespace tcone
