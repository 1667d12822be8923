#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tcone/errors.hpp"

namespace tcone {

inline constexpr int kMaxVars = 8;

// Exponent vector in up to kMaxVars variables. Unused slots stay zero, so
// structural comparison works across values with the same nvars.
struct Monomial {
    int nvars = 0;
    std::array<int, kMaxVars> e{};

    static Monomial unit(int n) {
        Monomial m;
        m.nvars = n;
        return m;
    }

    static Monomial var(int n, int i, int power = 1) {
        Monomial m = unit(n);
        m.e[i] = power;
        return m;
    }

    static Monomial of(std::span<const int> exps) {
        require(static_cast<int>(exps.size()) <= kMaxVars, errc::invalid_input,
                "too many variables");
        Monomial m;
        m.nvars = static_cast<int>(exps.size());
        for (int i = 0; i < m.nvars; ++i) m.e[i] = exps[i];
        return m;
    }

    int operator[](int i) const { return e[i]; }

    int degree() const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        return d;
    }

    long long weight(std::span<const long long> w) const {
        long long s = 0;
        for (int i = 0; i < nvars; ++i) s += static_cast<long long>(e[i]) * w[i];
        return s;
    }

    bool is_unit() const { return degree() == 0; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    bool disjoint_support(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }

    bool involves(int i) const { return e[i] > 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) r.e[i] += o.e[i];
        return r;
    }

    // Exact division; pre: o | *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) {
            r.e[i] -= o.e[i];
            require(r.e[i] >= 0, errc::internal, "monomial division not exact");
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.nvars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.nvars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
        return r;
    }

    auto operator<=>(const Monomial&) const = default;
};

// Text form used by the CLI and JSON output: x1^a*x2^b..., "1" for the unit.
inline std::string to_string(const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.nvars; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

// All monomials in nv variables of total degree n, in lexicographic order
// of exponent vectors.
inline void monomials_of_degree(int nv, int n, std::vector<Monomial>& out) {
    Monomial cur = Monomial::unit(nv);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == nv - 1) {
            cur.e[i] = rem;
            out.push_back(cur);
            cur.e[i] = 0;
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur.e[i] = v;
            self(self, i + 1, rem - v);
        }
        cur.e[i] = 0;
    };
    if (nv == 0) return;
    rec(rec, 0, n);
}

// Monomials of degree n and prescribed weight under w, lexicographic.
inline std::vector<Monomial> degree_weight_fiber(int nv, std::span<const long long> w, int n,
                                                 long long weight) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::unit(nv);
    auto rec = [&](auto&& self, int i, int rem, long long wrem) -> void {
        if (wrem < 0) return;
        if (i == nv - 1) {
            if (wrem == static_cast<long long>(rem) * w[i]) {
                cur.e[i] = rem;
                out.push_back(cur);
                cur.e[i] = 0;
            }
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            long long wr = wrem - static_cast<long long>(v) * w[i];
            if (wr < 0) break;
            cur.e[i] = v;
            self(self, i + 1, rem - v, wr);
        }
        cur.e[i] = 0;
    };
    if (nv == 0) return out;
    rec(rec, 0, n, weight);
    return out;
}

} // namespace tcone
