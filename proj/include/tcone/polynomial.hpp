#pragma once

#include <map>

#include "tcone/binomial.hpp"
#include "tcone/rational.hpp"

namespace tcone {

// Sparse rational polynomial; term map keeps a canonical (structural)
// iteration order and never stores zero coefficients.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial from(const Monomial& m, Rational c = Rational(1)) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    static Polynomial from(const Binomial& b) {
        Polynomial p = from(b.plus);
        p.add(b.minus, Rational(-1));
        return p;
    }

    static Polynomial from(const Element& el) {
        if (std::holds_alternative<Monomial>(el)) return from(std::get<Monomial>(el));
        return from(std::get<Binomial>(el));
    }

    void add(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }

    Polynomial times(const Monomial& m, const Rational& c) const {
        Polynomial r;
        for (const auto& [mm, cc] : terms_) r.add(mm * m, cc * c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool operator==(const Polynomial&) const = default;

private:
    std::map<Monomial, Rational> terms_;
};

inline const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& ord) {
    require(!p.is_zero(), errc::zero_polynomial, "leading monomial of zero");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || greater(ord, m, *best)) best = &m;
    return *best;
}

inline Polynomial initial_form(const Polynomial& p) {
    require(!p.is_zero(), errc::zero_polynomial, "initial form of zero");
    int lowest = INT32_MAX;
    for (const auto& [m, c] : p.terms()) lowest = std::min(lowest, m.degree());
    Polynomial r;
    for (const auto& [m, c] : p.terms())
        if (m.degree() == lowest) r.add(m, c);
    return r;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        if (c == Rational(1) && !m.is_unit())
            s += to_string(m);
        else if (m.is_unit())
            s += to_string(c);
        else
            s += to_string(c) + "*" + to_string(m);
    }
    return s;
}

} // namespace tcone
