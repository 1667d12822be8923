#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "tcone/semigroup.hpp"

namespace tcone {

// s_Q(m) for the principal reduction Q = t^{n1} R: the largest Apery order.
inline long long index_of_nilpotency(const NumericalSemigroup& G) {
    AperySet ap = G.apery(G.multiplicity());
    long long best = 0;
    for (long long w : ap.elements)
        if (w > 0) best = std::max(best, G.ord(w));
    return best;
}

namespace detail {

// Dense bit vector with "all ones" beyond its length.
struct BitVec {
    std::vector<uint64_t> words;
    size_t nbits = 0;

    explicit BitVec(size_t n, bool value = false) : words((n + 63) / 64, value ? ~0ull : 0), nbits(n) {
        trim();
    }
    bool test(size_t i) const { return i >= nbits ? true : (words[i / 64] >> (i % 64)) & 1; }
    void set(size_t i, bool v) {
        if (i >= nbits) return;
        if (v) words[i / 64] |= 1ull << (i % 64);
        else words[i / 64] &= ~(1ull << (i % 64));
    }
    void trim() {
        if (nbits % 64)
            for (size_t b = nbits % 64; b < 64; ++b) words.back() |= 1ull << b;
    }

    // this &= (other >> shift), shifting ones in from beyond other's length.
    void and_shifted(const BitVec& o, size_t shift) {
        size_t q = shift / 64, r = shift % 64;
        for (size_t w = 0; w < words.size(); ++w) {
            uint64_t lo = q + w < o.words.size() ? o.words[q + w] : ~0ull;
            uint64_t hi = q + w + 1 < o.words.size() ? o.words[q + w + 1] : ~0ull;
            uint64_t v = r == 0 ? lo : (lo >> r) | (hi << (64 - r));
            words[w] &= v;
        }
        trim();
    }

    // this |= (other << shift), zero-filled from below.
    void or_shifted_up(const BitVec& o, size_t shift) {
        size_t q = shift / 64, r = shift % 64;
        for (size_t w = words.size(); w-- > 0;) {
            uint64_t lo = w >= q && w - q < o.words.size() ? o.words[w - q] : 0;
            uint64_t hi = w >= q + 1 && w - q - 1 < o.words.size() ? o.words[w - q - 1] : 0;
            uint64_t v = r == 0 ? lo : (lo << r) | (hi >> (64 - r));
            words[w] |= v;
        }
    }

    bool intersects(const BitVec& o, size_t limit) const {
        for (size_t w = 0; w * 64 < limit; ++w) {
            uint64_t v = words[w] & o.words[w];
            if ((w + 1) * 64 > limit) v &= (limit % 64) ? ((1ull << (limit % 64)) - 1) : ~0ull;
            if (v) return true;
        }
        return false;
    }
};

} // namespace detail

// Goto number g(t^a R) = max { i : (Q : m^i) contained in the integral
// closure of Q }. In value terms: t^z lies in Q : m^i iff z + w - a is a
// member for every length-i composition value w, and the integral closure is
// { z in G : z >= a }. The composition condition satisfies
//   P_i(y) = AND_j P_{i-1}(y + n_j),  P_0(y) = [y in G],
// which is evaluated on bit vectors indexed by y = z - a in [-a, f].
inline long long goto_number(const NumericalSemigroup& G, long long a) {
    require(a > 0 && G.contains(a), errc::not_member,
            std::to_string(a) + " is not a nonzero member");
    const long long f = std::max<long long>(G.frobenius(), 0);
    const size_t len = static_cast<size_t>(a + f + 1); // index y + a, y in [-a, f]
    detail::BitVec member(len);
    for (size_t i = 0; i < len; ++i)
        member.set(i, G.contains(static_cast<long long>(i) - a));
    detail::BitVec members_below_a(len);
    for (long long z = 0; z < a; ++z)
        members_below_a.set(static_cast<size_t>(z), G.contains(z));

    detail::BitVec p = member;
    const long long ibound = (a + f) / G.multiplicity() + 2;
    for (long long i = 1; i <= ibound; ++i) {
        detail::BitVec next(len, true);
        for (long long g : G.generators()) {
            next.and_shifted(p, static_cast<size_t>(g));
        }
        p = std::move(next);
        // A member z < a with P_i(z - a) witnesses (Q : m^i) escaping Q-bar.
        if (p.intersects(members_below_a, static_cast<size_t>(a))) return i - 1;
    }
    fail(errc::internal, "goto number search exceeded its bound");
}

// Test-oracle variant: literal stars-and-bars composition enumeration.
inline long long goto_number_bruteforce(const NumericalSemigroup& G, long long a) {
    require(a > 0 && G.contains(a), errc::not_member, "not a member");
    auto escapes = [&](long long i) {
        for (long long z = 0; z < a; ++z) {
            if (!G.contains(z)) continue;
            bool all_in = true;
            std::vector<long long> comp(G.dim(), 0);
            auto rec = [&](auto&& self, int idx, long long rem) -> void {
                if (!all_in) return;
                if (idx == G.dim() - 1) {
                    long long w = z - a;
                    for (int j = 0; j < G.dim(); ++j)
                        w += (idx == j ? rem : comp[j]) * G.generators()[j];
                    if (!G.contains(w)) all_in = false;
                    return;
                }
                for (long long t = 0; t <= rem; ++t) {
                    comp[idx] = t;
                    self(self, idx + 1, rem - t);
                }
                comp[idx] = 0;
            };
            rec(rec, 0, i);
            if (all_in) return true;
        }
        return false;
    };
    for (long long i = 1;; ++i) {
        if (escapes(i)) return i - 1;
        require(i < 10000, errc::internal, "goto oracle runaway");
    }
}

// Reduction number r_Q(m): smallest r with m^{r+1} = Q m^r; the containment
// is checked on the generating values of m^{r+1}, i.e. the sums of exactly
// r+1 generators.
inline long long reduction_number(const NumericalSemigroup& G) {
    const long long s = index_of_nilpotency(G);
    const long long n1 = G.multiplicity();
    const auto& gens = G.generators();
    const size_t len = static_cast<size_t>((n1 + 1) * G.max_generator() + 1);
    detail::BitVec cur(len);
    cur.set(0, true);
    auto step = [&](detail::BitVec& v) {
        detail::BitVec nxt(len);
        for (long long g : gens) nxt.or_shifted_up(v, static_cast<size_t>(g));
        v = std::move(nxt);
    };
    for (long long k = 0; k < s; ++k) step(cur);
    for (long long r = s;; ++r) {
        require(r <= std::max<long long>(n1 - 1, 1), errc::internal,
                "reduction number exceeded the classical bound n1 - 1");
        step(cur); // sums of exactly r+1 generators
        bool ok = true;
        for (size_t v = 0; v < len && ok; ++v) {
            if (!cur.test(v)) continue;
            long long z = static_cast<long long>(v) - n1;
            if (z < 0 || !G.contains(z) || G.ord(z) < r) ok = false;
        }
        if (ok) return r;
    }
}

// ord_m(C) = min { ord(z) : z > f }; the minimum is attained in the window
// (f, f + n1] since ord(z) >= 1 + ord(z - n1).
inline long long conductor_order(const NumericalSemigroup& G) {
    long long best = -1;
    for (long long z = G.frobenius() + 1; z <= G.frobenius() + G.multiplicity(); ++z) {
        long long o = G.ord(z);
        if (best < 0 || o < best) best = o;
    }
    return best;
}

struct GotoReport {
    long long s_q = 0;
    long long r_q = 0;
    long long conductor_ord = 0;
    std::map<long long, long long> goto_of_generators; // n_i -> g(t^{n_i})
    long long goto_special = 0;                        // g(t^{f + n1 + 1})
    long long ord_special = 0;                         // ord(f + n1)
    bool ddag_equality = false;  // g(t^{f+n1+1}) == min_i g(t^{n_i})
    bool chain_all_equal = false; // the five quantities of the main corollary
    std::optional<bool> apery_dominated; // every Apery element precedes f + n1
    std::optional<Rational> elasticity_special;
};

// Assembles the reduction-theoretic invariants. Verdicts are reported, not
// thrown; with_preceq additionally evaluates the partial-order domination of
// the Apery set by f + n1 (factorization enumeration, so optional).
inline GotoReport equality_chain_report(const NumericalSemigroup& G, bool with_preceq = true) {
    GotoReport rep;
    rep.s_q = index_of_nilpotency(G);
    rep.r_q = reduction_number(G);
    rep.conductor_ord = conductor_order(G);
    long long special = G.frobenius() + G.multiplicity();
    rep.ord_special = special > 0 ? G.ord(special) : 0;
    for (long long g : G.generators()) rep.goto_of_generators[g] = goto_number(G, g);
    rep.goto_special = goto_number(G, special + 1);
    long long gmin = rep.goto_of_generators.begin()->second;
    for (const auto& [g, v] : rep.goto_of_generators) gmin = std::min(gmin, v);
    rep.ddag_equality = rep.goto_special == gmin;
    long long gn1 = rep.goto_of_generators.at(G.multiplicity());
    rep.chain_all_equal = rep.goto_special == gn1 && gn1 == rep.r_q &&
                          rep.r_q == rep.conductor_ord && rep.conductor_ord == rep.ord_special;
    if (with_preceq && special > 0) {
        bool all = true;
        for (long long w : G.apery(G.multiplicity()).elements)
            if (!G.precedes(w, special)) {
                all = false;
                break;
            }
        rep.apery_dominated = all;
        rep.elasticity_special = G.elasticity(special);
    }
    return rep;
}

} // namespace tcone
