#pragma once

#include <algorithm>
#include <array>
#include <map>

#include "tcone/standard_basis.hpp"

namespace tcone {

// Ideals in k[x,y,z] generated by one binomial f = x^a - y^{b'} z^{c'} and a
// finite list of monomials. Monomial data is kept normalized against f
// (x-exponents below a) and interreduced.

struct AlmostBinomial {
    long long a = 0;  // x^a
    long long bp = 0; // y^{b'}
    long long cp = 0; // z^{c'}

    Binomial to_binomial() const {
        return Binomial{Monomial::of(std::array{static_cast<int>(a), 0, 0}),
                        Monomial::of(std::array{0, static_cast<int>(bp), static_cast<int>(cp)})};
    }

    bool operator==(const AlmostBinomial&) const = default;
};

struct AlmostMonomialIdeal {
    std::optional<AlmostBinomial> binomial;
    std::vector<Monomial> monomials; // nvars == 3
    bool strict = false;             // f belongs to the minimal standard basis
};

namespace am {

inline Monomial mono(long long x, long long y, long long z) {
    return Monomial::of(std::array{static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});
}

// Normal form against {f}: rewrite x^a -> y^{b'} z^{c'} until the x-exponent
// drops below a.
inline Monomial nf_mono(Monomial m, const AlmostBinomial& f) {
    while (m.e[0] >= f.a) {
        m.e[0] -= static_cast<int>(f.a);
        m.e[1] += static_cast<int>(f.bp);
        m.e[2] += static_cast<int>(f.cp);
    }
    return m;
}

inline void interreduce(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < gens.size() && !dominated; ++j)
            if (i != j && gens[j].divides(gens[i]) && !(gens[j] == gens[i] && j > i))
                dominated = true;
        if (!dominated) kept.push_back(gens[i]);
    }
    gens = std::move(kept);
}

// Monomial congruence classes modulo (f) are the orbits of the rewrite
// x^a <-> y^{b'} z^{c'}, so a monomial lies in (f) + (gens) iff some orbit
// representative is divisible by a generator.
inline bool orbit_member(Monomial m, const std::optional<AlmostBinomial>& f,
                         std::span<const Monomial> gens) {
    if (f) m = nf_mono(m, *f);
    for (;;) {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        if (!f || (f->bp == 0 && f->cp == 0)) return false;
        if ((f->bp > 0 && m.e[1] < f->bp) || (f->cp > 0 && m.e[2] < f->cp)) return false;
        m.e[0] += static_cast<int>(f->a);
        m.e[1] -= static_cast<int>(f->bp);
        m.e[2] -= static_cast<int>(f->cp);
    }
}

inline AlmostMonomialIdeal normalized(AlmostMonomialIdeal K) {
    if (K.binomial)
        for (auto& m : K.monomials) m = nf_mono(m, *K.binomial);
    interreduce(K.monomials);
    // Redundancy can also flow through the binomial (a monomial whose shifted
    // representative is divisible by another generator).
    if (K.binomial) {
        for (;;) {
            bool dropped = false;
            for (size_t i = 0; i < K.monomials.size() && !dropped; ++i) {
                std::vector<Monomial> others;
                for (size_t j = 0; j < K.monomials.size(); ++j)
                    if (j != i) others.push_back(K.monomials[j]);
                if (orbit_member(K.monomials[i], K.binomial, others)) {
                    K.monomials.erase(K.monomials.begin() + static_cast<long>(i));
                    dropped = true;
                }
            }
            if (!dropped) break;
        }
    }
    // A unit generator swallows everything, including the binomial.
    for (const auto& m : K.monomials)
        if (m.is_unit()) {
            K.binomial.reset();
            K.monomials = {Monomial::unit(3)};
            K.strict = false;
            break;
        }
    return K;
}

inline bool contains_monomial(const AlmostMonomialIdeal& K, Monomial m) {
    return orbit_member(std::move(m), K.binomial, K.monomials);
}

inline std::optional<long long> pure_power(const AlmostMonomialIdeal& K, int var) {
    std::optional<long long> best;
    for (const auto& g : K.monomials) {
        bool pure = g.e[var] > 0;
        for (int v = 0; v < 3; ++v)
            if (v != var && g.e[v] > 0) pure = false;
        if (pure && (!best || g.e[var] < *best)) best = g.e[var];
    }
    return best;
}

} // namespace am

// (f, y^b, z^c) : x^alpha y^beta z^gamma, by the five-generator colon
// formula; the colon only depends on m modulo (f), so m is normal-formed
// first. The result is interreduced.
inline AlmostMonomialIdeal colon_by_monomial(const AlmostMonomialIdeal& J, const Monomial& m_in) {
    require(J.binomial.has_value(), errc::shape_mismatch, "colon needs the binomial generator");
    const AlmostBinomial& f = *J.binomial;
    auto yb = am::pure_power(J, 1);
    auto zc = am::pure_power(J, 2);
    require(yb && zc && J.monomials.size() == 2, errc::shape_mismatch,
            "colon formula needs J = (f, y^b, z^c)");
    long long b = *yb, c = *zc;
    Monomial m = am::nf_mono(m_in, f);
    long long al = m.e[0], be = m.e[1], ga = m.e[2];
    AlmostMonomialIdeal out;
    out.binomial = f;
    out.strict = true;
    out.monomials = {
        am::mono(0, std::max<long long>(b - be, 0), 0),
        am::mono(0, 0, std::max<long long>(c - ga, 0)),
        am::mono(std::max<long long>(f.a - al, 0), std::max<long long>(b - f.bp - be, 0), 0),
        am::mono(std::max<long long>(f.a - al, 0), 0, std::max<long long>(c - f.cp - ga, 0)),
    };
    return am::normalized(std::move(out));
}

// K1 cap K2 = (f) + (K1' cap K2') for almost monomial ideals sharing f; the
// monomial parts are normalized modulo f first, then intersected by pairwise
// lcm.
inline AlmostMonomialIdeal intersect(const AlmostMonomialIdeal& K1, const AlmostMonomialIdeal& K2) {
    require(K1.binomial == K2.binomial, errc::binomial_mismatch,
            "intersection needs matching binomial parts");
    AlmostMonomialIdeal a = am::normalized(K1);
    AlmostMonomialIdeal b = am::normalized(K2);
    AlmostMonomialIdeal out;
    out.binomial = K1.binomial;
    out.strict = K1.strict && K2.strict;
    for (const auto& u : a.monomials)
        for (const auto& v : b.monomials) out.monomials.push_back(lcm(u, v));
    return am::normalized(std::move(out));
}

// J : L for the complete intersection J = (f, y^b, z^c) and an almost
// monomial L sharing f, by intersecting the monomial colons over the
// generators of L outside J.
inline AlmostMonomialIdeal colon_almost(const AlmostBinomial& f, long long b, long long c,
                                        const AlmostMonomialIdeal& L) {
    require(L.binomial == std::optional<AlmostBinomial>(f), errc::binomial_mismatch,
            "colon needs a matching binomial part");
    AlmostMonomialIdeal J;
    J.binomial = f;
    J.strict = true;
    J.monomials = {am::mono(0, b, 0), am::mono(0, 0, c)};
    std::vector<Monomial> sharp;
    for (const auto& g : L.monomials)
        if (!am::contains_monomial(J, g)) sharp.push_back(g); // J : m = (1) for m in J
    if (sharp.empty()) {
        // L lies inside J, so J : L = J : J = (1).
        AlmostMonomialIdeal unit;
        unit.monomials = {Monomial::unit(3)};
        return unit;
    }
    std::optional<AlmostMonomialIdeal> Q;
    for (const auto& m : sharp) {
        AlmostMonomialIdeal C = colon_by_monomial(J, m);
        Q = Q ? intersect(*Q, C) : C;
    }
    return *Q;
}

// The link J : L with J built from L's own pure powers.
inline AlmostMonomialIdeal link_ideal(const AlmostMonomialIdeal& L_in) {
    AlmostMonomialIdeal L = am::normalized(L_in);
    require(L.binomial.has_value() && L.strict, errc::shape_mismatch,
            "linkage needs a strict almost monomial ideal");
    auto yb = am::pure_power(L, 1);
    auto zc = am::pure_power(L, 2);
    require(yb && zc, errc::shape_mismatch, "linkage needs pure y- and z-powers");
    return colon_almost(*L.binomial, *yb, *zc, L);
}

// Cohen-Macaulay type via linkage: mu((J:L)/J) counted on the minimal
// generators of J:L that escape J. Type 1 means Gorenstein.
inline int link_and_type(const AlmostMonomialIdeal& L_in) {
    AlmostMonomialIdeal L = am::normalized(L_in);
    require(L.binomial.has_value() && L.strict, errc::shape_mismatch,
            "linkage needs a strict almost monomial ideal");
    auto yb = am::pure_power(L, 1);
    auto zc = am::pure_power(L, 2);
    require(yb && zc, errc::shape_mismatch, "linkage needs pure y- and z-powers");
    AlmostMonomialIdeal J;
    J.binomial = L.binomial;
    J.strict = true;
    J.monomials = {am::mono(0, *yb, 0), am::mono(0, 0, *zc)};
    AlmostMonomialIdeal Q = link_ideal(L_in);
    int count = 0;
    for (const auto& g : Q.monomials)
        if (!am::contains_monomial(J, g)) ++count;
    return count;
}

// Matches L against (f, y^b, z^c, x^{a-alpha} y^{b-b'}, x^{a-alpha} z^{c-c'})
// or the 3-generator complete-intersection pattern (alpha = 0 convention).
struct Gor3Parameters {
    long long a = 0, b = 0, c = 0, bp = 0, cp = 0, alpha = 0;
};

inline std::optional<Gor3Parameters> recognize_gor3(const AlmostMonomialIdeal& L_in) {
    AlmostMonomialIdeal L = am::normalized(L_in);
    if (!L.binomial || !L.strict) return std::nullopt;
    const AlmostBinomial& f = *L.binomial;
    auto yb = am::pure_power(L, 1);
    auto zc = am::pure_power(L, 2);
    if (!yb || !zc) return std::nullopt;
    std::vector<Monomial> rest;
    for (const auto& g : L.monomials)
        if (!(g == am::mono(0, *yb, 0)) && !(g == am::mono(0, 0, *zc))) rest.push_back(g);
    if (rest.empty()) return Gor3Parameters{f.a, *yb, *zc, f.bp, f.cp, 0};
    if (rest.size() != 2) return std::nullopt;
    // Key observations: no generator divisible by yz, the two non-pure-power
    // monomials share the x component, and no pure x-power appears.
    const Monomial *my = nullptr, *mz = nullptr;
    for (const auto& g : rest) {
        if (g.e[1] > 0 && g.e[2] > 0) return std::nullopt;
        if (g.e[0] <= 0) return std::nullopt;
        if (g.e[1] > 0) my = &g;
        else if (g.e[2] > 0) mz = &g;
        else return std::nullopt; // pure x-power
    }
    if (!my || !mz) return std::nullopt;
    if (my->e[0] != mz->e[0]) return std::nullopt;
    long long s = my->e[0];
    if (my->e[1] != *yb - f.bp || mz->e[2] != *zc - f.cp) return std::nullopt;
    long long alpha = f.a - s;
    if (alpha < 1 || alpha >= f.a) return std::nullopt;
    return Gor3Parameters{f.a, *yb, *zc, f.bp, f.cp, alpha};
}

// Builds the 5x5 antisymmetric matrix of the structure theorem and checks
// that its five submaximal Pfaffians regenerate the (Gor3) ideal.
inline bool pfaffian_check(const Gor3Parameters& p) {
    struct Entry {
        int sign = 0;
        Monomial m = Monomial::unit(3);
    };
    auto E = [](int s, Monomial m) { return Entry{s, std::move(m)}; };
    const long long a = p.a, b = p.b, c = p.c, bp = p.bp, cp = p.cp, al = p.alpha;
    std::array<std::array<Entry, 5>, 5> M{};
    auto set = [&](int i, int j, int sign, Monomial m) {
        M[i][j] = E(sign, m);
        M[j][i] = E(-sign, std::move(m));
    };
    set(0, 2, -1, am::mono(0, bp, 0));
    set(0, 4, +1, am::mono(a - al, 0, 0));
    set(1, 2, -1, am::mono(0, 0, c - cp));
    set(1, 3, +1, am::mono(0, b - bp, 0));
    set(2, 3, +1, am::mono(al, 0, 0));
    set(3, 4, +1, am::mono(0, 0, cp));

    // Pfaffian of the 4x4 minor omitting row/column k: af - be + cd on the
    // entries (m12, m13, m14, m23, m24, m34) of the remaining matrix.
    auto pfaffian4 = [&](std::array<int, 4> idx) {
        std::map<Monomial, int> terms;
        auto accumulate = [&](const Entry& u, const Entry& v, int sign) {
            if (u.sign == 0 || v.sign == 0) return;
            Monomial prod = u.m * v.m;
            terms[prod] += sign * u.sign * v.sign;
            if (terms[prod] == 0) terms.erase(prod);
        };
        accumulate(M[idx[0]][idx[1]], M[idx[2]][idx[3]], +1);
        accumulate(M[idx[0]][idx[2]], M[idx[1]][idx[3]], -1);
        accumulate(M[idx[0]][idx[3]], M[idx[1]][idx[2]], +1);
        return terms;
    };

    std::vector<std::map<Monomial, int>> pfaffians;
    for (int k = 0; k < 5; ++k) {
        std::array<int, 4> idx{};
        int t = 0;
        for (int i = 0; i < 5; ++i)
            if (i != k) idx[t++] = i;
        pfaffians.push_back(pfaffian4(idx));
    }

    // Normalize each Pfaffian to a generator: a single monomial or +-f.
    AlmostMonomialIdeal got;
    got.strict = true;
    for (auto& terms : pfaffians) {
        if (terms.empty()) return false;
        if (terms.size() == 1) {
            got.monomials.push_back(terms.begin()->first);
            continue;
        }
        if (terms.size() != 2) return false;
        auto it = terms.begin();
        Monomial m1 = it->first;
        int s1 = it->second;
        ++it;
        Monomial m2 = it->first;
        int s2 = it->second;
        if (s1 + s2 != 0 || std::abs(s1) != 1) return false;
        Monomial xs = s1 > 0 ? m1 : m2;
        Monomial ys = s1 > 0 ? m2 : m1;
        if (got.binomial) return false;
        if (!(xs == am::mono(a, 0, 0) && ys == am::mono(0, bp, cp)) &&
            !(ys == am::mono(a, 0, 0) && xs == am::mono(0, bp, cp)))
            return false;
        got.binomial = AlmostBinomial{a, bp, cp};
    }
    if (!got.binomial) return false;
    got = am::normalized(std::move(got));

    AlmostMonomialIdeal want;
    want.binomial = AlmostBinomial{a, bp, cp};
    want.strict = true;
    want.monomials = {am::mono(0, b, 0), am::mono(0, 0, c), am::mono(a - al, b - bp, 0),
                      am::mono(a - al, 0, c - cp)};
    want = am::normalized(std::move(want));
    return got.binomial == want.binomial && got.monomials == want.monomials;
}

// ---------------------------------------------------------------------------
// Appendix computation: the ten elements in k[t,x,y,z] under lexicographic
// t > x > y > z whose closure certifies the colon formula.

struct AppendixParams {
    long long a, b, c, bp, cp, alpha, beta, gamma;
};

struct AppendixRun {
    bool closed = false; // every s-polynomial reduces to zero
    bool extraction_ok = false;
    // trace[{i,j}] lists the 1-based indices of the reducers used for
    // spoly(f_i, f_j); an empty list means the s-polynomial is zero itself.
    std::map<std::pair<int, int>, std::vector<int>> trace;
};

inline std::vector<Element> appendix_elements(const AppendixParams& p) {
    auto M4 = [](long long t, long long x, long long y, long long z) {
        return Monomial::of(std::array{static_cast<int>(t), static_cast<int>(x),
                                       static_cast<int>(y), static_cast<int>(z)});
    };
    const long long a = p.a, b = p.b, c = p.c, bp = p.bp, cp = p.cp;
    const long long al = p.alpha, be = p.beta, ga = p.gamma;
    std::vector<Element> f;
    f.push_back(Binomial{M4(1, a, 0, 0), M4(1, 0, bp, cp)});                  // f1
    f.push_back(M4(1, 0, b, 0));                                              // f2
    f.push_back(M4(1, 0, 0, c));                                              // f3
    f.push_back(Binomial{M4(1, al, be, ga), M4(0, al, be, ga)});              // f4
    f.push_back(Binomial{M4(1, 0, bp + be, cp + ga), M4(0, a, be, ga)});      // f5
    f.push_back(M4(0, al, b, ga));                                            // f6
    f.push_back(M4(0, al, be, c));                                            // f7
    f.push_back(M4(0, a, b - bp, ga));                                        // f8
    f.push_back(M4(0, a, be, c - cp));                                        // f9
    f.push_back(Binomial{M4(0, al + a, be, ga), M4(0, al, be + bp, ga + cp)}); // f10
    return f;
}

inline AppendixRun appendix_oracle(const AppendixParams& p) {
    require(p.alpha >= 0 && p.beta >= 0 && p.gamma >= 0 && p.bp >= 0 && p.cp >= 0 &&
                p.bp + p.cp >= 1 && p.a >= 1,
            errc::precondition_violated, "appendix parameters out of range");
    require(p.alpha < p.a && p.beta < p.b - p.bp && p.gamma < p.c - p.cp,
            errc::precondition_violated,
            "appendix needs alpha < a, beta < b - b', gamma < c - c'");
    MonomialOrder ord = MonomialOrder::lex({0, 1, 2, 3});
    std::vector<Element> f = appendix_elements(p);
    std::vector<SBElement> basis;
    for (const auto& el : f) basis.push_back(to_sb_element(el, ord));

    AppendixRun run;
    run.closed = true;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto sp = spoly(f[i], f[j], ord);
            std::vector<int> steps;
            if (sp) {
                std::vector<int> raw;
                auto r = reduce(to_sb_element(*sp, ord), basis, ord, &raw);
                if (r.has_value()) run.closed = false;
                for (int k : raw) steps.push_back(k + 1);
            }
            run.trace[{i + 1, j + 1}] = std::move(steps);
        }

    // The t-free elements are m * (the colon generators), m = x^al y^be z^ga.
    Monomial m = Monomial::of(std::array{0, static_cast<int>(p.alpha), static_cast<int>(p.beta),
                                         static_cast<int>(p.gamma)});
    auto strip_t = [](const Monomial& w) {
        return Monomial::of(std::array{w.e[1], w.e[2], w.e[3]});
    };
    AlmostMonomialIdeal J;
    J.binomial = AlmostBinomial{p.a, p.bp, p.cp};
    J.strict = true;
    J.monomials = {am::mono(0, p.b, 0), am::mono(0, 0, p.c)};
    AlmostMonomialIdeal quotient = colon_by_monomial(J, strip_t(m));

    AlmostMonomialIdeal extracted;
    extracted.strict = true;
    bool ok = true;
    for (int k = 5; k < 10; ++k) {
        if (std::holds_alternative<Monomial>(f[k])) {
            Monomial w = std::get<Monomial>(f[k]);
            if (w.e[0] != 0 || !m.divides(w)) ok = false;
            else extracted.monomials.push_back(strip_t(w / m));
        } else {
            const Binomial& bb = std::get<Binomial>(f[k]);
            if (bb.plus.e[0] != 0 || bb.minus.e[0] != 0 || !m.divides(bb.plus) ||
                !m.divides(bb.minus)) {
                ok = false;
                continue;
            }
            Monomial lhs = strip_t(bb.plus / m), rhs = strip_t(bb.minus / m);
            if (lhs == am::mono(p.a, 0, 0) && rhs == am::mono(0, p.bp, p.cp))
                extracted.binomial = AlmostBinomial{p.a, p.bp, p.cp};
            else
                ok = false;
        }
    }
    if (ok) {
        extracted = am::normalized(std::move(extracted));
        ok = extracted.binomial == quotient.binomial && extracted.monomials == quotient.monomials;
    }
    run.extraction_ok = ok;
    return run;
}

} // namespace tcone
