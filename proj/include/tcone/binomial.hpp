#pragma once

#include <optional>
#include <variant>

#include "tcone/order.hpp"

namespace tcone {

// f = plus - minus with coefficients fixed at +1, -1.
struct Binomial {
    Monomial plus;
    Monomial minus;

    Binomial() = default;
    Binomial(Monomial p, Monomial m) : plus(std::move(p)), minus(std::move(m)) {
        require(plus != minus, errc::zero_polynomial, "binomial sides must differ");
    }

    int nvars() const { return plus.nvars; }

    auto operator<=>(const Binomial&) const = default;
};

// Results of spoly/reduction stay in {monomial, binomial}; zero is
// represented by an empty optional at the call sites.
using Element = std::variant<Monomial, Binomial>;

inline int element_nvars(const Element& el) {
    return std::holds_alternative<Monomial>(el) ? std::get<Monomial>(el).nvars
                                                : std::get<Binomial>(el).nvars();
}

inline std::string to_string(const Binomial& b) {
    return to_string(b.plus) + " - " + to_string(b.minus);
}

inline std::string to_string(const Element& el) {
    if (std::holds_alternative<Monomial>(el)) return to_string(std::get<Monomial>(el));
    return to_string(std::get<Binomial>(el));
}

inline const Monomial& leading_monomial(const Binomial& f, const MonomialOrder& ord) {
    return greater(ord, f.plus, f.minus) ? f.plus : f.minus;
}

inline const Monomial& leading_monomial(const Element& f, const MonomialOrder& ord) {
    if (std::holds_alternative<Monomial>(f)) return std::get<Monomial>(f);
    return leading_monomial(std::get<Binomial>(f), ord);
}

// Sign-normalize so the order-leading monomial carries coefficient +1.
inline Element normalized(const Binomial& f, const MonomialOrder& ord) {
    if (greater(ord, f.plus, f.minus)) return f;
    return Binomial{f.minus, f.plus};
}

// Lowest-total-degree homogeneous part. For a weakly balanced binomial this
// is a single monomial (strict degree gap) or the whole binomial (balanced).
// Sign is dropped for the monomial case; generators of ideals do not carry it.
inline Element initial_form(const Binomial& f) {
    int dp = f.plus.degree(), dm = f.minus.degree();
    if (dp < dm) return f.plus;
    if (dm < dp) return f.minus;
    return f;
}

inline Element initial_form(const Element& f) {
    if (std::holds_alternative<Monomial>(f)) return f;
    return initial_form(std::get<Binomial>(f));
}

inline bool is_weakly_balanced(const Binomial& f, std::span<const long long> weights) {
    require(f.nvars() == static_cast<int>(weights.size()), errc::dimension_mismatch,
            "weight vector size mismatch");
    return f.plus.weight(weights) == f.minus.weight(weights);
}

inline bool is_balanced(const Binomial& f, std::span<const long long> weights) {
    return is_weakly_balanced(f, weights) && f.plus.degree() == f.minus.degree() &&
           f.plus.disjoint_support(f.minus);
}

// spoly(f, g) = (lcm/LM(f)) f - (lcm/LM(g)) g, sign-normalized; nullopt is 0.
// Closed on {monomial, binomial} since all coefficients are +-1.
inline std::optional<Element> spoly(const Element& f, const Element& g,
                                    const MonomialOrder& ord) {
    const Monomial& lf = leading_monomial(f, ord);
    const Monomial& lg = leading_monomial(g, ord);
    Monomial l = lcm(lf, lg);
    Monomial u = l / lf;
    Monomial v = l / lg;
    // u*f - v*g = v*tail(g) - u*tail(f) once the leading terms cancel.
    std::optional<Monomial> tf, tg;
    if (std::holds_alternative<Binomial>(f)) {
        const Binomial& b = std::get<Binomial>(f);
        tf = u * (greater(ord, b.plus, b.minus) ? b.minus : b.plus);
    }
    if (std::holds_alternative<Binomial>(g)) {
        const Binomial& b = std::get<Binomial>(g);
        tg = v * (greater(ord, b.plus, b.minus) ? b.minus : b.plus);
    }
    if (!tf && !tg) return std::nullopt;
    if (tf && tg) {
        if (*tf == *tg) return std::nullopt;
        return normalized(Binomial{*tg, *tf}, ord);
    }
    return tf ? Element(*tf) : Element(*tg);
}

} // namespace tcone
