#pragma once

#include <algorithm>
#include <array>
#include <map>

#include "tcone/semigroup.hpp"
#include "tcone/standard_basis.hpp"

namespace tcone {

// Defining ideal of the semigroup ring, as a minimal binomial generating
// set. Every generator vanishes under x_i -> t^{n_i}; the plus side is the
// order-leading monomial of the module's default nice order.
struct DefiningIdeal {
    std::vector<Binomial> generators;
    NumericalSemigroup semigroup;
    MonomialOrder order;

    int mu() const { return static_cast<int>(generators.size()); }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline Monomial monomial_of(const Factorization& f, int nv) {
    Monomial m = Monomial::unit(nv);
    for (int i = 0; i < nv; ++i) m.e[i] = static_cast<int>(f.coeffs[i]);
    return m;
}

} // namespace detail

// Minimal presentation via Betti elements. A value b is a Betti element iff
// the graph on A(b) = { i : b - n_i in G } with edges b - n_i - n_j in G is
// disconnected (factorizations supported in one component of that graph are
// chained through shared indices). Every Betti element satisfies
// b <= f + n_1 + n_d: beyond that bound every pair {i, 1} is an edge, which
// makes the graph connected. One binomial per extra component links its
// lexicographically smallest factorization to the first component's; the
// candidate is top-reduced against the generators already emitted.
inline DefiningIdeal defining_ideal(const NumericalSemigroup& G,
                                    std::optional<MonomialOrder> order = {}) {
    const int d = G.dim();
    MonomialOrder ord = order ? *order : MonomialOrder::default_local(d);
    require(ord.nvars() == d, errc::dimension_mismatch, "order variable count mismatch");
    std::vector<long long> w = G.weights();
    DefiningIdeal ideal{{}, G, ord};
    if (d <= 1) return ideal;

    std::vector<SBElement> emitted;
    const long long bound = G.frobenius() + G.multiplicity() + G.max_generator();
    for (long long b = 1; b <= bound; ++b) {
        if (!G.contains(b)) continue;
        std::vector<int> avail;
        for (int i = 0; i < d; ++i)
            if (G.contains(b - w[i])) avail.push_back(i);
        if (avail.size() < 2) continue;
        detail::UnionFind uf(d);
        for (size_t a = 0; a < avail.size(); ++a)
            for (size_t c = a + 1; c < avail.size(); ++c)
                if (G.contains(b - w[avail[a]] - w[avail[c]]))
                    uf.unite(avail[a], avail[c]);
        int comps = 0;
        for (int i : avail)
            if (uf.find(i) == i) ++comps;
        if (comps <= 1) continue;

        auto fiber = G.factorizations(b);
        // fiber is sorted lexicographically, so the first factorization seen
        // for each component is its lex-min representative.
        std::map<int, Monomial> rep;
        std::vector<int> comp_order;
        int first_comp = -1;
        for (const auto& f : fiber) {
            int support = -1;
            for (int i = 0; i < d; ++i)
                if (f.coeffs[i] > 0) {
                    support = i;
                    break;
                }
            int root = uf.find(support);
            if (!rep.count(root)) {
                rep.emplace(root, detail::monomial_of(f, d));
                comp_order.push_back(root);
            }
            if (first_comp < 0) first_comp = root;
        }
        for (int root : comp_order) {
            if (root == first_comp) continue;
            Monomial ma = rep.at(root);
            Monomial mb = rep.at(first_comp);
            Element cand = normalized(Binomial{ma, mb}, ord);
            auto r = reduce(to_sb_element(cand, ord), emitted, ord);
            require(r.has_value() && r->tail.has_value(), errc::internal,
                    "Betti candidate collapsed during reduction");
            emitted.push_back(*r);
            ideal.generators.emplace_back(r->lm, *r->tail);
        }
    }
    return ideal;
}

// ---------------------------------------------------------------------------
// Herzog structure for d = 3.

struct HerzogSymmetric {
    std::array<int, 3> perm{};    // (i, j, k), 0-based variable indices
    long long alpha_i = 0;        // x_i^{alpha_i} - x_j^{alpha_j}
    long long alpha_j = 0;
    long long alpha_k = 0;        // x_k^{alpha_k} - x_i^{r_ki} x_j^{r_kj}
    long long r_ki = 0;
    long long r_kj = 0;
    long long predicted_frobenius = 0;
};

struct HerzogNonSymmetric {
    std::array<long long, 3> alpha{};       // pure-power exponents
    std::array<std::array<long long, 3>, 3> off{}; // off[i][j] = exp of x_j in tail of gen i
};

using HerzogClass = std::variant<HerzogSymmetric, HerzogNonSymmetric>;

namespace detail {

// Side of g that is a pure power of variable v, if any.
inline std::optional<long long> pure_side(const Binomial& g, int v) {
    auto pure = [&](const Monomial& m) -> std::optional<long long> {
        for (int i = 0; i < m.nvars; ++i)
            if (i != v && m.e[i] > 0) return std::nullopt;
        if (m.e[v] <= 0) return std::nullopt;
        return m.e[v];
    };
    if (auto p = pure(g.plus)) return p;
    return pure(g.minus);
}

inline bool is_pure_pure(const Binomial& g, int a, int b) {
    return (pure_side(g, a) && pure_side(g, b)) &&
           ((g.plus.involves(a) && g.minus.involves(b)) ||
            (g.plus.involves(b) && g.minus.involves(a)));
}

inline const Monomial& side_with(const Binomial& g, int v) {
    return g.plus.involves(v) ? g.plus : g.minus;
}

inline const Monomial& side_without(const Binomial& g, int v) {
    return g.plus.involves(v) ? g.minus : g.plus;
}

} // namespace detail

inline HerzogClass herzog_classify(const DefiningIdeal& I) {
    const NumericalSemigroup& G = I.semigroup;
    require(G.dim() == 3, errc::invalid_input, "herzog_classify needs d = 3");
    const auto& n = G.generators();
    const auto& gens = I.generators;

    if (gens.size() == 2) {
        // Symmetric: (x_i^a - x_j^b, x_k^c - x_i^r x_j^s); lexicographically
        // smallest valid permutation wins.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                int k = 3 - i - j;
                for (int pair_gen = 0; pair_gen < 2; ++pair_gen) {
                    const Binomial& pg = gens[pair_gen];
                    const Binomial& kg = gens[1 - pair_gen];
                    if (!detail::is_pure_pure(pg, i, j)) continue;
                    long long ai = detail::side_with(pg, i).e[i];
                    long long aj = detail::side_with(pg, j).e[j];
                    auto ak = detail::pure_side(kg, k);
                    if (!ak) continue;
                    const Monomial& tail = detail::side_without(kg, k);
                    if (tail.involves(k)) continue;
                    long long rki = tail.e[i], rkj = tail.e[j];
                    // Normalize the x_j exponent below alpha_j.
                    while (rkj >= aj) {
                        rkj -= aj;
                        rki += ai;
                    }
                    long long pred = (ai - 1) * n[i] + (*ak - 1) * n[k] - n[j];
                    if (pred != G.frobenius()) continue;
                    return HerzogSymmetric{{i, j, k}, ai, aj, *ak, rki, rkj, pred};
                }
            }
        fail(errc::structure_mismatch, "2-generated ideal does not match Herzog(a)");
    }
    if (gens.size() == 3) {
        HerzogNonSymmetric cls;
        std::array<bool, 3> seen{};
        for (const Binomial& g : gens) {
            int pure_var = -1;
            for (int v = 0; v < 3; ++v)
                if (detail::pure_side(g, v) && !detail::side_without(g, v).involves(v))
                    pure_var = v;
            require(pure_var >= 0, errc::structure_mismatch,
                    "generator has no pure-power side: " + to_string(g));
            require(!seen[pure_var], errc::structure_mismatch,
                    "two generators share the pure variable");
            seen[pure_var] = true;
            cls.alpha[pure_var] = detail::side_with(g, pure_var).e[pure_var];
            const Monomial& tail = detail::side_without(g, pure_var);
            for (int v = 0; v < 3; ++v)
                if (v != pure_var) {
                    require(tail.e[v] >= 1, errc::structure_mismatch,
                            "non-symmetric tail with zero exponent");
                    cls.off[pure_var][v] = tail.e[v];
                }
        }
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            require(cls.alpha[i] == cls.off[j][i] + cls.off[k][i], errc::structure_mismatch,
                    "alpha_i = alpha_ji + alpha_ki fails");
        }
        return cls;
    }
    fail(errc::structure_mismatch,
         "mu(I) = " + std::to_string(gens.size()) + " is impossible for d = 3");
}

// ---------------------------------------------------------------------------
// Bresinsky structure for d = 4 symmetric.

struct BresinskyCaseI {
    std::array<int, 2> pair1{}; // {p, q} with x_p^{a1} - x_q^{a2}
    std::array<int, 2> pair2{};
    std::array<long long, 4> alpha{}; // pure exponents by variable
    std::array<long long, 4> beta{};  // mixed-generator exponents by variable
    int subcase = 0;                  // 1: {12}{34}, 2: {13}{24}, 3: {14}{23}
};

struct BresinskyCaseII {
    std::array<int, 4> perm{}; // (i, j, h, k)
    std::array<long long, 4> alpha{};
    std::array<std::array<long long, 4>, 4> off{};
};

enum class CaseIIISubcase { S1a, S1b, S2a, S2b, S3a, S3b };

inline const char* to_string(CaseIIISubcase s) {
    switch (s) {
        case CaseIIISubcase::S1a: return "1a";
        case CaseIIISubcase::S1b: return "1b";
        case CaseIIISubcase::S2a: return "2a";
        case CaseIIISubcase::S2b: return "2b";
        case CaseIIISubcase::S3a: return "3a";
        case CaseIIISubcase::S3b: return "3b";
    }
    return "?";
}

struct BresinskyCaseIII {
    CaseIIISubcase subcase = CaseIIISubcase::S1a;
    std::array<long long, 4> alpha{};
    std::array<std::array<long long, 4>, 4> off{}; // off[i][j] = exp of x_j in tail of f_i
};

using BresinskyClass = std::variant<BresinskyCaseI, BresinskyCaseII, BresinskyCaseIII>;

namespace detail {

// Tail supports of f_1..f_4 for the six Case III patterns, 0-based.
struct CaseIIIPattern {
    CaseIIISubcase label;
    std::array<std::array<int, 2>, 4> tails; // tails[i] = support of f_{i+1}'s tail
    std::array<int, 2> f5_plus;              // support of f5's first side
    std::array<int, 2> f5_minus;
};

inline const std::array<CaseIIIPattern, 6>& case3_patterns() {
    static const std::array<CaseIIIPattern, 6> pats = {{
        {CaseIIISubcase::S1a, {{{2, 3}, {0, 3}, {0, 1}, {1, 2}}}, {0, 2}, {1, 3}},
        {CaseIIISubcase::S1b, {{{2, 3}, {0, 2}, {1, 3}, {0, 1}}}, {0, 3}, {1, 2}},
        {CaseIIISubcase::S2a, {{{1, 2}, {2, 3}, {0, 3}, {0, 1}}}, {1, 3}, {0, 2}},
        {CaseIIISubcase::S2b, {{{1, 2}, {0, 3}, {1, 3}, {0, 2}}}, {0, 1}, {3, 2}},
        {CaseIIISubcase::S3a, {{{1, 3}, {0, 2}, {0, 3}, {1, 2}}}, {0, 1}, {2, 3}},
        {CaseIIISubcase::S3b, {{{1, 3}, {2, 3}, {0, 1}, {0, 2}}}, {1, 2}, {0, 3}},
    }};
    return pats;
}

inline bool support_is(const Monomial& m, std::array<int, 2> vars) {
    for (int v = 0; v < m.nvars; ++v) {
        bool in = v == vars[0] || v == vars[1];
        if (m.e[v] > 0 && !in) return false;
    }
    return m.e[vars[0]] > 0 && m.e[vars[1]] > 0;
}

} // namespace detail

inline BresinskyClass bresinsky_classify(const DefiningIdeal& I) {
    const NumericalSemigroup& G = I.semigroup;
    require(G.dim() == 4, errc::invalid_input, "bresinsky_classify needs d = 4");
    require(G.is_symmetric(), errc::invalid_input, "bresinsky_classify needs symmetric G");
    const auto& gens = I.generators;

    if (gens.size() == 3) {
        // Case I: two pure-pure generators on disjoint pairs.
        static const std::array<std::array<int, 4>, 3> pairings = {{
            {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (int pi = 0; pi < 3; ++pi) {
            auto [p, q, r, s] = std::tuple{pairings[pi][0], pairings[pi][1], pairings[pi][2],
                                           pairings[pi][3]};
            int g1 = -1, g2 = -1;
            for (int t = 0; t < 3; ++t) {
                if (detail::is_pure_pure(gens[t], p, q)) g1 = t;
                if (detail::is_pure_pure(gens[t], r, s)) g2 = t;
            }
            if (g1 < 0 || g2 < 0 || g1 == g2) continue;
            int g3 = 3 - g1 - g2;
            const Binomial& mix = gens[g3];
            // One side in {p,q}, the other in {r,s}; zero exponents allowed.
            auto side_in = [&](const Monomial& m, int a, int b) {
                for (int v = 0; v < 4; ++v)
                    if (m.e[v] > 0 && v != a && v != b) return false;
                return true;
            };
            const Monomial *m12 = nullptr, *m34 = nullptr;
            if (side_in(mix.plus, p, q) && side_in(mix.minus, r, s)) {
                m12 = &mix.plus;
                m34 = &mix.minus;
            } else if (side_in(mix.minus, p, q) && side_in(mix.plus, r, s)) {
                m12 = &mix.minus;
                m34 = &mix.plus;
            } else {
                continue;
            }
            BresinskyCaseI cls;
            cls.pair1 = {p, q};
            cls.pair2 = {r, s};
            cls.subcase = pi + 1;
            cls.alpha[p] = detail::side_with(gens[g1], p).e[p];
            cls.alpha[q] = detail::side_with(gens[g1], q).e[q];
            cls.alpha[r] = detail::side_with(gens[g2], r).e[r];
            cls.alpha[s] = detail::side_with(gens[g2], s).e[s];
            for (int v = 0; v < 4; ++v) cls.beta[v] = std::max(m12->e[v], m34->e[v]);
            return cls;
        }
        // Case II: chain complete intersection
        // (x_i^{a_i} - x_j^{a_j}, x_h^{a_h} - tail{i,j}, x_k^{a_k} - tail{i,j,h}).
        static const std::array<std::array<int, 3>, 6> assigns = {{
            {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int h = 0; h < 4; ++h) {
                    if (h == i || h == j) continue;
                    int k = 6 - i - j - h;
                    for (const auto& as : assigns) {
                        const Binomial& gp = gens[as[0]];
                        const Binomial& gh = gens[as[1]];
                        const Binomial& gk = gens[as[2]];
                        if (!detail::is_pure_pure(gp, i, j)) continue;
                        if (!detail::pure_side(gh, h) || detail::side_without(gh, h).involves(h) ||
                            detail::side_without(gh, h).involves(k))
                            continue;
                        if (!detail::pure_side(gk, k) || detail::side_without(gk, k).involves(k))
                            continue;
                        BresinskyCaseII cls;
                        cls.perm = {i, j, h, k};
                        cls.alpha[i] = detail::side_with(gp, i).e[i];
                        cls.alpha[j] = detail::side_with(gp, j).e[j];
                        cls.alpha[h] = detail::side_with(gh, h).e[h];
                        cls.alpha[k] = detail::side_with(gk, k).e[k];
                        for (int v = 0; v < 4; ++v) {
                            cls.off[h][v] = detail::side_without(gh, h).e[v];
                            cls.off[k][v] = detail::side_without(gk, k).e[v];
                        }
                        return cls;
                    }
                }
        fail(errc::structure_mismatch, "3-generated symmetric d=4 ideal matches neither I nor II");
    }

    if (gens.size() == 5) {
        BresinskyCaseIII cls;
        std::array<const Binomial*, 4> pure_gen{};
        const Binomial* f5 = nullptr;
        for (const Binomial& g : gens) {
            int pv = -1;
            for (int v = 0; v < 4; ++v)
                if (detail::pure_side(g, v) && !detail::side_without(g, v).involves(v)) pv = v;
            if (pv >= 0) {
                require(!pure_gen[pv], errc::structure_mismatch,
                        "two Case III generators share a pure variable");
                pure_gen[pv] = &g;
            } else {
                require(!f5, errc::structure_mismatch, "two mixed generators in Case III");
                f5 = &g;
            }
        }
        for (int v = 0; v < 4; ++v)
            require(pure_gen[v], errc::structure_mismatch, "missing pure generator in Case III");
        require(f5, errc::structure_mismatch, "missing mixed generator in Case III");
        for (int v = 0; v < 4; ++v) {
            cls.alpha[v] = detail::side_with(*pure_gen[v], v).e[v];
            const Monomial& tail = detail::side_without(*pure_gen[v], v);
            for (int u = 0; u < 4; ++u) cls.off[v][u] = tail.e[u];
        }
        for (const auto& pat : detail::case3_patterns()) {
            bool ok = true;
            for (int v = 0; v < 4 && ok; ++v)
                ok = detail::support_is(detail::side_without(*pure_gen[v], v), pat.tails[v]);
            if (!ok) continue;
            // Bresinsky's sum identities: alpha_j is the sum of the two tail
            // exponents carried on x_j.
            for (int j = 0; j < 4; ++j) {
                long long sum = 0;
                for (int v = 0; v < 4; ++v) sum += cls.off[v][j];
                require(sum == cls.alpha[j], errc::structure_mismatch,
                        "Case III sum identity fails on x" + std::to_string(j + 1));
            }
            // f5's sides live on the complementary index pairs; the exponent
            // on x_v comes from the pure generator sitting on the opposite
            // side whose tail contains x_v.
            auto expected_side = [&](std::array<int, 2> sup, std::array<int, 2> other) {
                Monomial m = Monomial::unit(4);
                for (int v : sup)
                    for (int u : other)
                        if (pat.tails[u][0] == v || pat.tails[u][1] == v)
                            m.e[v] = static_cast<int>(cls.off[u][v]);
                return m;
            };
            Monomial ep = expected_side(pat.f5_plus, pat.f5_minus);
            Monomial em = expected_side(pat.f5_minus, pat.f5_plus);
            bool direct = f5->plus == ep && f5->minus == em;
            bool flipped = f5->plus == em && f5->minus == ep;
            require(direct || flipped, errc::structure_mismatch,
                    "Case III mixed generator does not carry the tail exponents");
            cls.subcase = pat.label;
            return cls;
        }
        fail(errc::structure_mismatch, "Case III tails match no subcase pattern");
    }
    fail(errc::structure_mismatch,
         "mu(I) = " + std::to_string(gens.size()) + " matches no Bresinsky case");
}

// f + n1 predicted by the matched complete-intersection structure, with a
// maximal-length decomposition over the non-multiplicity generators. For
// complete intersections the Frobenius number is the sum of the relation
// weights minus the sum of all generators.
struct SpecialElement {
    long long value = 0; // f + n1
    std::vector<long long> decomposition;
};

inline SpecialElement special_element(const NumericalSemigroup& G,
                                      const std::variant<HerzogClass, BresinskyClass>& cls) {
    const auto& n = G.generators();
    long long predicted = 0;
    if (std::holds_alternative<HerzogClass>(cls)) {
        const auto& h = std::get<HerzogClass>(cls);
        require(std::holds_alternative<HerzogSymmetric>(h), errc::not_applicable,
                "special element needs the symmetric structure");
        const auto& s = std::get<HerzogSymmetric>(h);
        predicted = s.predicted_frobenius + n[0];
    } else {
        const auto& b = std::get<BresinskyClass>(cls);
        require(!std::holds_alternative<BresinskyCaseIII>(b), errc::not_applicable,
                "special element is case-by-case for Case III");
        long long relation_sum = 0;
        if (std::holds_alternative<BresinskyCaseI>(b)) {
            const auto& c = std::get<BresinskyCaseI>(b);
            relation_sum = c.alpha[c.pair1[0]] * n[c.pair1[0]] +
                           c.alpha[c.pair2[0]] * n[c.pair2[0]];
            long long mixed = 0;
            mixed += c.beta[c.pair1[0]] * n[c.pair1[0]] + c.beta[c.pair1[1]] * n[c.pair1[1]];
            relation_sum += mixed;
        } else {
            const auto& c = std::get<BresinskyCaseII>(b);
            relation_sum = c.alpha[c.perm[0]] * n[c.perm[0]] + c.alpha[c.perm[2]] * n[c.perm[2]] +
                           c.alpha[c.perm[3]] * n[c.perm[3]];
        }
        predicted = relation_sum - n[1] - n[2] - n[3];
    }
    require(predicted == G.frobenius() + n[0], errc::theorem_violation,
            "structure-predicted Frobenius number disagrees with the semigroup");
    SpecialElement out;
    out.value = predicted;
    long long best = -1;
    for (const auto& f : G.factorizations(out.value))
        if (f.length > best) {
            best = f.length;
            out.decomposition = f.coeffs;
        }
    return out;
}

} // namespace tcone
