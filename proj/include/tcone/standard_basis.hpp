#pragma once

#include <deque>
#include <queue>

#include "tcone/binomial.hpp"

namespace tcone {

// Standard-basis engine for ideals generated by weakly balanced binomials
// under a local ordering. Everything in sight is homogeneous for the
// semigroup weights, each weight class holds finitely many monomials, and a
// reduction step strictly lowers the leading monomial inside its class, so
// plain top-reduction plus pair completion terminates without Mora's ecart
// machinery.

struct SBElement {
    Monomial lm;                  // order-leading monomial, coefficient +1
    std::optional<Monomial> tail; // subtracted monomial, absent for monomials

    Element to_element() const {
        if (tail) return Binomial{lm, *tail};
        return lm;
    }

    bool operator==(const SBElement&) const = default;
};

struct StandardBasis {
    std::vector<SBElement> elements;
    MonomialOrder order;
    std::vector<long long> weights;
};

struct InitialFormIdeal {
    std::vector<Element> generators; // monomials or balanced binomials
    MonomialOrder order;
    std::vector<long long> weights;
};

inline SBElement to_sb_element(const Element& el, const MonomialOrder& ord) {
    if (std::holds_alternative<Monomial>(el)) return SBElement{std::get<Monomial>(el), {}};
    const Binomial& b = std::get<Binomial>(el);
    if (greater(ord, b.plus, b.minus)) return SBElement{b.plus, b.minus};
    return SBElement{b.minus, b.plus};
}

namespace detail {

inline int find_reducer(const Monomial& m, std::span<const SBElement> basis) {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].lm.divides(m)) return static_cast<int>(i);
    return -1;
}

// One top-reduction step against basis[k]; empty result means cancellation
// to zero.
inline std::optional<SBElement> reduce_step(const SBElement& f, const SBElement& g,
                                            const MonomialOrder& ord) {
    Monomial q = f.lm / g.lm;
    if (!g.tail) {
        if (!f.tail) return std::nullopt;
        return SBElement{*f.tail, {}};
    }
    Monomial repl = q * *g.tail;
    if (!f.tail) return SBElement{repl, {}};
    if (repl == *f.tail) return std::nullopt;
    if (greater(ord, repl, *f.tail)) return SBElement{repl, *f.tail};
    return SBElement{*f.tail, repl};
}

} // namespace detail

// Top normal form: cancels the leading term by the first basis element whose
// leading monomial divides it until irreducible. The optional trace records
// the reducers used, in order.
inline std::optional<SBElement> reduce(SBElement f, std::span<const SBElement> basis,
                                       const MonomialOrder& ord,
                                       std::vector<int>* trace = nullptr) {
    for (;;) {
        int k = detail::find_reducer(f.lm, basis);
        if (k < 0) return f;
        if (trace) trace->push_back(k);
        auto next = detail::reduce_step(f, basis[k], ord);
        if (!next) return std::nullopt;
        f = std::move(*next);
    }
}

inline std::optional<Element> reduce(const Element& f, std::span<const SBElement> basis,
                                     const MonomialOrder& ord,
                                     std::vector<int>* trace = nullptr) {
    auto r = reduce(to_sb_element(f, ord), basis, ord, trace);
    if (!r) return std::nullopt;
    return r->to_element();
}

// Buchberger-style completion, lowest lcm weight first, followed by
// minimalization (first-entered element wins ties) and tail interreduction.
inline StandardBasis standard_basis(const std::vector<Binomial>& gens, MonomialOrder ord,
                                    std::vector<long long> weights) {
    require(!gens.empty(), errc::empty_input, "no generators");
    int maxexp = 1;
    for (const Binomial& g : gens) {
        require(is_weakly_balanced(g, weights), errc::invalid_input,
                "generator is not weakly balanced: " + to_string(g));
        for (int i = 0; i < g.nvars(); ++i)
            maxexp = std::max({maxexp, g.plus.e[i], g.minus.e[i]});
    }
    long long span = weights.back() - weights.front();
    require(order_is_nice_in(ord, 0, maxexp + static_cast<int>(span), weights),
            errc::order_not_nice, "ordering is not nice in x1");

    std::vector<SBElement> basis;
    struct Pair {
        long long weight;
        long long seq;
        int i, j;
        bool operator>(const Pair& o) const {
            return std::tie(weight, seq) > std::tie(o.weight, o.seq);
        }
    };
    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;
    long long seq = 0;
    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Monomial l = lcm(basis[i].lm, basis[j].lm);
            pairs.push(Pair{l.weight(weights), seq++, i, j});
        }
    };
    for (const Binomial& g : gens) {
        auto r = reduce(to_sb_element(normalized(g, ord), ord), basis, ord);
        if (!r) continue;
        basis.push_back(std::move(*r));
        add_pairs(static_cast<int>(basis.size()) - 1);
    }
    while (!pairs.empty()) {
        auto [w, s, i, j] = pairs.top();
        pairs.pop();
        auto sp = spoly(basis[i].to_element(), basis[j].to_element(), ord);
        if (!sp) continue;
        auto r = reduce(to_sb_element(*sp, ord), basis, ord);
        if (!r) continue;
        basis.push_back(std::move(*r));
        add_pairs(static_cast<int>(basis.size()) - 1);
        require(basis.size() < 4096, errc::internal, "standard basis completion runaway");
    }

    // Minimalize: drop any element whose leading monomial is divisible by
    // another kept element's; the earlier element survives equal leads.
    std::vector<char> drop(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || drop[j]) continue;
            if (basis[j].lm == basis[i].lm ? j < i : basis[j].lm.divides(basis[i].lm)) {
                drop[i] = 1;
                break;
            }
        }
    }
    std::vector<SBElement> kept;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!drop[i]) kept.push_back(basis[i]);

    // Tail interreduction; same termination argument as top reduction.
    for (size_t i = 0; i < kept.size(); ++i) {
        while (kept[i].tail) {
            int k = -1;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i && kept[j].lm.divides(*kept[i].tail)) {
                    k = static_cast<int>(j);
                    break;
                }
            if (k < 0) break;
            if (!kept[k].tail) {
                kept[i].tail.reset();
                break;
            }
            Monomial repl = (*kept[i].tail / kept[k].lm) * *kept[k].tail;
            require(repl != kept[i].lm, errc::internal, "tail reduction cancelled a basis element");
            kept[i].tail = repl;
        }
    }
    return StandardBasis{std::move(kept), std::move(ord), std::move(weights)};
}

// The initial forms of a minimal standard basis minimally generate the
// initial form ideal; each is a monomial or a balanced binomial.
inline InitialFormIdeal initial_form_ideal(const StandardBasis& sb) {
    InitialFormIdeal ifi{{}, sb.order, sb.weights};
    for (const SBElement& el : sb.elements) {
        Element form = initial_form(el.to_element());
        if (std::holds_alternative<Binomial>(form))
            require(is_balanced(std::get<Binomial>(form), sb.weights), errc::internal,
                    "equal-degree initial form must be balanced");
        bool dup = false;
        for (const Element& g : ifi.generators)
            if (g == form) dup = true;
        if (!dup) ifi.generators.push_back(std::move(form));
    }
    return ifi;
}

inline int mu(const InitialFormIdeal& ifi) { return static_cast<int>(ifi.generators.size()); }

} // namespace tcone
