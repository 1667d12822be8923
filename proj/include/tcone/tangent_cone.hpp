#pragma once

#include "tcone/almost_monomial.hpp"
#include "tcone/graded.hpp"
#include "tcone/ring_invariants.hpp"
#include "tcone/toric.hpp"

namespace tcone {

// gr_m(R) is Cohen-Macaulay iff x1 stays regular, i.e. no monomial generator
// of the minimal standard basis carries a positive x1 exponent.
inline bool is_cm(const InitialFormIdeal& ifi) {
    for (const Element& g : ifi.generators)
        if (std::holds_alternative<Monomial>(g) && std::get<Monomial>(g).e[0] > 0) return false;
    return true;
}

// Arithmetic Cohen-Macaulay test from the matched Herzog structure.
inline bool d3_cm_fastpath(const HerzogClass& cls) {
    if (std::holds_alternative<HerzogNonSymmetric>(cls)) {
        const auto& c = std::get<HerzogNonSymmetric>(cls);
        return c.alpha[1] <= c.off[1][0] + c.off[1][2];
    }
    const auto& s = std::get<HerzogSymmetric>(cls);
    int a = std::min(s.perm[0], s.perm[1]);
    int b = std::max(s.perm[0], s.perm[1]);
    if (a == 0 && b == 1) return true; // complete intersection in x1, x2
    if (a == 0 && b == 2) return s.alpha_k <= s.r_ki + s.r_kj;
    // pair {x2, x3}: spoly adds x2^{a2+r_ki} - x1^{ak} x3^{a3-r_kj}
    long long alpha2 = s.perm[0] == 1 ? s.alpha_i : s.alpha_j;
    long long alpha3 = s.perm[0] == 1 ? s.alpha_j : s.alpha_i;
    long long a12 = s.perm[0] == 1 ? s.r_ki : s.r_kj;
    long long a13 = s.perm[0] == 1 ? s.r_kj : s.r_ki;
    return alpha2 + a12 <= s.alpha_k + alpha3 - a13;
}

// ---------------------------------------------------------------------------
// 0-th local cohomology of the tangent cone via x1-saturation, degreewise.

struct H0Class {
    int degree = 0;
    long long weight = 0;
    std::vector<Monomial> support;       // block region monomials
    std::vector<long long> coords;       // class representative over support
};

struct H0Data {
    long long length = 0;
    std::map<int, long long> dim_by_degree;
    std::vector<H0Class> classes;
    std::vector<Monomial> monomial_basis; // valid when monomial_spanning
    bool monomial_spanning = true;
    int buchsbaum_level = 0;
};

namespace detail {

struct H0Run {
    std::map<int, long long> dims;
    long long total = 0;
    std::vector<H0Class> classes;
    std::vector<Monomial> monos;
    bool monomial_spanning = true;
};

// Extract explicit class data for one block known to carry H0.
inline void h0_block_classes(QuotientBlocks& qb, int n, long long w, int D, long long expected,
                             H0Run& run) {
    const long long n1 = qb.multiplicity();
    const int K = D - n;
    const auto& src = qb.block(n, w);
    const auto& tgt = qb.block(D, w + static_cast<long long>(K) * n1);
    std::vector<std::vector<long long>> images;
    images.reserve(src.monos.size());
    for (const Monomial& m : src.monos) {
        Monomial shifted = m;
        shifted.e[0] += K;
        auto it = tgt.index.find(shifted);
        require(it != tgt.index.end(), errc::internal, "x1-shift left the region block");
        std::vector<long long> row(tgt.monos.size(), 0);
        row[it->second] = 1;
        images.push_back(std::move(row));
    }
    auto kern = kernel_mod(tgt.rows.rows(), images, static_cast<int>(tgt.monos.size()));
    long long h0dim = static_cast<long long>(kern.size()) - src.rows.rank();
    require(h0dim == expected, errc::internal, "chain and block H0 dimensions disagree");
    // Class representatives: kernel vectors independent mod the ideal block;
    // monomial representatives greedily when they span.
    RowSpace span = src.rows;
    for (auto& v : kern)
        if (span.insert(v)) run.classes.push_back(H0Class{n, w, src.monos, v});
    RowSpace mono_span = src.rows;
    long long found = 0;
    for (size_t i = 0; i < src.monos.size(); ++i) {
        std::vector<long long> unit(src.monos.size(), 0);
        unit[i] = 1;
        bool saturated = tgt.rows.contains(images[i]);
        if (saturated && mono_span.insert(unit)) {
            run.monos.push_back(src.monos[i]);
            ++found;
        }
    }
    if (found != h0dim) run.monomial_spanning = false;
}

// One stabilization run at working degree D. Each x1-tower of blocks is
// handled with two eliminations of its degree-D system: the saturation
// dimension at degree n is the number of echelon pivots in the degree-<= n
// column suffix, and the ideal dimension is the rank of the rows available
// by degree n (multiplier x1-exponent at least D - n).
inline H0Run h0_run(QuotientBlocks& qb, int D) {
    H0Run run;
    const long long n1 = qb.multiplicity();
    for (const auto& [theta, members] : qb.chains()) {
        int mindeg = members.front().degree();
        if (mindeg > D) continue;
        auto sys = qb.chain_system(theta, D);
        const int s = static_cast<int>(sys.columns.size());
        if (s == 0) continue;

        RowSpace span(s);
        for (const auto& r : sys.rows) span.insert(r);
        // Saturation dims per degree from pivot columns.
        std::vector<long long> sat_dim(static_cast<size_t>(D) + 1, 0);
        for (int p = 0; p < span.rank(); ++p) {
            int deg = sys.coldeg[static_cast<size_t>(span.pivot(p))];
            for (int n = deg; n <= D; ++n) ++sat_dim[static_cast<size_t>(n)];
        }
        // Ideal dims per degree from the nested row families.
        std::vector<size_t> order(sys.rows.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return sys.row_nmin[a] < sys.row_nmin[b]; });
        RowSpace ideal(s);
        size_t next = 0;
        for (int n = mindeg; n <= D; ++n) {
            while (next < order.size() && sys.row_nmin[order[next]] <= n)
                ideal.insert(sys.rows[order[next++]]);
            long long h0dim = sat_dim[static_cast<size_t>(n)] - ideal.rank();
            if (h0dim > 0) {
                run.dims[n] += h0dim;
                run.total += h0dim;
                h0_block_classes(qb, n, theta + static_cast<long long>(n) * n1, D, h0dim, run);
            }
        }
    }
    return run;
}

} // namespace detail

// Smallest k with M^k H0 = 0; 0 exactly when the cone is Cohen-Macaulay.
inline int buchsbaum_level_of(QuotientBlocks& qb, const std::vector<H0Class>& classes) {
    if (classes.empty()) return 0;
    const int nv = qb.nvars();
    for (int k = 1;; ++k) {
        require(k <= 64, errc::internal, "Buchsbaum level runaway");
        bool killed = true;
        std::vector<Monomial> mults;
        monomials_of_degree(nv, k, mults);
        for (const H0Class& cls : classes) {
            for (const Monomial& u : mults) {
                long long w = cls.weight + u.weight(qb.weights());
                const auto& blk = qb.block(cls.degree + k, w);
                std::vector<long long> coords(blk.monos.size(), 0);
                for (size_t i = 0; i < cls.support.size(); ++i) {
                    if (cls.coords[i] == 0) continue;
                    Monomial prod = cls.support[i] * u;
                    auto it = blk.index.find(prod);
                    if (it != blk.index.end()) coords[it->second] += cls.coords[i];
                    // products leaving the region lie in the ideal
                }
                if (!blk.rows.contains(std::move(coords))) {
                    killed = false;
                    break;
                }
            }
            if (!killed) break;
        }
        if (killed) return k;
    }
}

// Full H0 computation with the stabilization loop on the working degree D:
// start at maxdeg(I*) + n1 and re-run with D + n1 until two consecutive runs
// agree on every per-degree dimension.
inline H0Data h0_compute(QuotientBlocks& qb, const InitialFormIdeal& ifi) {
    int maxdeg = 1;
    for (const Element& g : ifi.generators) {
        int d = std::holds_alternative<Monomial>(g) ? std::get<Monomial>(g).degree()
                                                    : std::get<Binomial>(g).plus.degree();
        maxdeg = std::max(maxdeg, d);
    }
    int n1 = static_cast<int>(qb.multiplicity());
    int D = maxdeg + n1;
    detail::H0Run prev = detail::h0_run(qb, D);
    int agreements = 0;
    for (int round = 0;; ++round) {
        require(round < 64, errc::internal, "H0 stabilization runaway");
        D += n1;
        detail::H0Run cur = detail::h0_run(qb, D);
        agreements = (cur.dims == prev.dims && cur.total == prev.total) ? agreements + 1 : 0;
        if (agreements >= 2) {
            H0Data out;
            out.length = cur.total;
            out.dim_by_degree = cur.dims;
            out.classes = std::move(cur.classes);
            out.monomial_basis = std::move(cur.monos);
            out.monomial_spanning = cur.monomial_spanning;
            out.buchsbaum_level = buchsbaum_level_of(qb, out.classes);
            return out;
        }
        prev = std::move(cur);
    }
}

// Vector-space basis of H0 as monomial representatives (the d = 3 theory
// guarantees monomials span; elsewhere the caller can fall back to classes).
inline std::vector<Monomial> h0_basis(QuotientBlocks& qb, const InitialFormIdeal& ifi) {
    H0Data data = h0_compute(qb, ifi);
    require(data.monomial_spanning, errc::internal,
            "H0 has no monomial spanning set; use h0_compute");
    return data.monomial_basis;
}

inline std::vector<Monomial> h0_basis(const InitialFormIdeal& ifi) {
    QuotientBlocks qb(ifi);
    return h0_basis(qb, ifi);
}

inline long long h0_length(const InitialFormIdeal& ifi) {
    QuotientBlocks qb(ifi);
    return h0_compute(qb, ifi).length;
}

inline int buchsbaum_level(const InitialFormIdeal& ifi) {
    QuotientBlocks qb(ifi);
    return h0_compute(qb, ifi).buchsbaum_level;
}

inline long long hilbert_function(QuotientBlocks& qb, int n) {
    require(n >= 0, errc::invalid_input, "degree must be nonnegative");
    return qb.hilbert(n);
}

inline long long hilbert_function(const InitialFormIdeal& ifi, int n) {
    QuotientBlocks qb(ifi);
    return hilbert_function(qb, n);
}

// Socle (0 : M) dimensions of the tangent cone, by block.
inline long long socle_dimension(QuotientBlocks& qb, int degree_bound) {
    const int nv = qb.nvars();
    long long dim = 0;
    for (int n = 0; n <= degree_bound; ++n) {
        for (long long w : qb.weights_at_degree(n)) {
            const auto& blk = qb.block(n, w);
            if (blk.monos.empty()) continue;
            // Stack the multiplication maps by every variable.
            std::vector<const QuotientBlocks::Block*> tgts(nv);
            std::vector<int> offset(nv + 1, 0);
            for (int i = 0; i < nv; ++i) {
                tgts[i] = &qb.block(n + 1, w + qb.weights()[i]);
                offset[i + 1] = offset[i] + static_cast<int>(tgts[i]->monos.size());
            }
            int cols = offset[nv];
            std::vector<std::vector<long long>> sub;
            for (int i = 0; i < nv; ++i)
                for (const auto& r : tgts[i]->rows.rows()) {
                    std::vector<long long> row(cols, 0);
                    std::copy(r.begin(), r.end(), row.begin() + offset[i]);
                    sub.push_back(std::move(row));
                }
            std::vector<std::vector<long long>> imgs;
            for (const Monomial& m : blk.monos) {
                std::vector<long long> row(cols, 0);
                for (int i = 0; i < nv; ++i) {
                    Monomial prod = m * Monomial::var(nv, i);
                    auto it = tgts[i]->index.find(prod);
                    if (it != tgts[i]->index.end()) row[offset[i] + it->second] = 1;
                }
                imgs.push_back(std::move(row));
            }
            auto kern = kernel_mod(sub, imgs, cols);
            dim += static_cast<long long>(kern.size()) - blk.rows.rank();
        }
    }
    return dim;
}

// ---------------------------------------------------------------------------
// Gorenstein detection for d <= 4 through the x1 = 0 reduction.

namespace detail {

struct ModX1 {
    bool has_binomial = false;
    AlmostMonomialIdeal almost;               // for d = 4
    std::vector<Monomial> monomials;          // image monomials, d-1 variables
};

// Image of the minimal standard basis of I* under x1 -> 0, re-minimalized in
// the remaining variables by a standard basis computation there.
inline ModX1 mod_x1_image(const InitialFormIdeal& ifi) {
    const int nv = static_cast<int>(ifi.weights.size());
    const int mv = nv - 1;
    auto shrink = [&](const Monomial& m) {
        Monomial r = Monomial::unit(mv);
        for (int i = 1; i < nv; ++i) r.e[i - 1] = m.e[i];
        return r;
    };
    std::vector<Element> image;
    for (const Element& g : ifi.generators) {
        if (std::holds_alternative<Monomial>(g)) {
            const Monomial& m = std::get<Monomial>(g);
            require(m.e[0] == 0, errc::internal, "x1 divides a monomial generator of a CM cone");
            image.push_back(shrink(m));
            continue;
        }
        const Binomial& b = std::get<Binomial>(g);
        require(b.plus.e[0] == 0, errc::internal, "balanced lead involves x1 under a nice order");
        if (b.minus.e[0] > 0)
            image.push_back(shrink(b.plus));
        else
            image.push_back(Binomial{shrink(b.plus), shrink(b.minus)});
    }
    ModX1 out;
    bool any_binomial = false;
    for (const Element& g : image)
        if (std::holds_alternative<Binomial>(g)) any_binomial = true;
    if (!any_binomial) {
        std::vector<Monomial> monos;
        for (const Element& g : image) monos.push_back(std::get<Monomial>(g));
        am::interreduce(monos);
        out.monomials = std::move(monos);
        return out;
    }
    // Complete to a standard basis in the image ring; the reversed
    // negdegrevlex keeps the pure-x3 side of the one balanced survivor in
    // front.
    std::vector<int> perm(static_cast<size_t>(mv));
    for (int i = 0; i < mv; ++i) perm[i] = mv - 1 - i;
    MonomialOrder ord = MonomialOrder::negdegrevlex(perm);
    std::vector<SBElement> elems;
    for (const Element& g : image) {
        auto r = reduce(to_sb_element(g, ord), elems, ord);
        if (r) elems.push_back(*r);
    }
    for (;;) {
        bool changed = false;
        size_t count = elems.size();
        for (size_t i = 0; i < count && !changed; ++i)
            for (size_t j = i + 1; j < count && !changed; ++j) {
                auto sp = spoly(elems[i].to_element(), elems[j].to_element(), ord);
                if (!sp) continue;
                auto r = reduce(to_sb_element(*sp, ord), elems, ord);
                if (r) {
                    elems.push_back(*r);
                    changed = true;
                }
            }
        if (!changed) break;
        require(elems.size() < 512, errc::internal, "image completion runaway");
    }
    // Minimalize.
    std::vector<SBElement> kept;
    for (size_t i = 0; i < elems.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < elems.size() && !drop; ++j)
            if (i != j &&
                (elems[j].lm == elems[i].lm ? j < i : elems[j].lm.divides(elems[i].lm)))
                drop = true;
        if (!drop) kept.push_back(elems[i]);
    }
    int binomials = 0;
    for (const SBElement& el : kept)
        if (el.tail) ++binomials;
    require(binomials <= 1, errc::internal,
            "more than one binomial survives the x1 = 0 reduction");
    out.has_binomial = binomials == 1;
    if (!out.has_binomial) {
        for (const SBElement& el : kept) out.monomials.push_back(el.lm);
        am::interreduce(out.monomials);
        return out;
    }
    // d = 4 almost monomial frame: (x, y, z) = (x3, x2, x4) in the original
    // variables, i.e. image indices (1, 0, 2).
    require(mv == 3, errc::internal, "binomial image in unexpected dimension");
    AlmostMonomialIdeal L;
    L.strict = true;
    for (const SBElement& el : kept) {
        if (el.tail) {
            require(el.lm.e[1] > 0 && el.lm.e[0] == 0 && el.lm.e[2] == 0, errc::internal,
                    "image binomial lead is not a pure x3 power");
            require(el.tail->e[1] == 0, errc::internal, "image binomial tail involves x3");
            L.binomial = AlmostBinomial{el.lm.e[1], el.tail->e[0], el.tail->e[2]};
        } else {
            L.monomials.push_back(am::mono(el.lm.e[1], el.lm.e[0], el.lm.e[2]));
        }
    }
    out.almost = std::move(L);
    return out;
}

} // namespace detail

// Gorenstein property of the tangent cone for d <= 4: substitute x1 -> 0 and
// decide the artinian image. d = 3: two minimal generators; d = 4: type one
// via linkage, cross-checked against the structural recognizer.
inline bool is_gorenstein(const InitialFormIdeal& ifi) {
    const int d = static_cast<int>(ifi.weights.size());
    require(d <= 4, errc::dimension_unsupported, "Gorenstein detection needs d <= 4");
    if (!is_cm(ifi)) return false;
    if (d <= 2) return true;
    detail::ModX1 img = detail::mod_x1_image(ifi);
    if (d == 3) {
        require(!img.has_binomial, errc::internal, "no balanced binomial survives mod x1 at d=3");
        return img.monomials.size() == 2;
    }
    if (!img.has_binomial) {
        // Monomial artinian: Gorenstein iff generated by pure powers.
        if (img.monomials.size() != 3) return false;
        for (const Monomial& m : img.monomials) {
            int support = 0;
            for (int i = 0; i < 3; ++i)
                if (m.e[i] > 0) ++support;
            if (support != 1) return false;
        }
        return true;
    }
    int type = link_and_type(img.almost);
    bool structural = recognize_gor3(img.almost).has_value();
    require((type == 1) == structural, errc::theorem_violation,
            "linkage type and Gor3 recognition disagree");
    return type == 1;
}

// Prop. "mythm1" fast path: Gorenstein Case III cones exist only in the
// sub-cases with f3 = (3,(2,4)), with alpha_2 bounded by m_2's degree and
// alpha_3 equal to m_3's degree.
inline bool d4_gorenstein_fastpath(const BresinskyClass& cls) {
    require(std::holds_alternative<BresinskyCaseIII>(cls), errc::not_applicable,
            "fast path applies to Case III only");
    const auto& c = std::get<BresinskyCaseIII>(cls);
    long long m2deg = c.off[1][0] + c.off[1][2] + c.off[1][3];
    long long m3deg = c.off[2][0] + c.off[2][1] + c.off[2][3];
    bool shape = c.subcase == CaseIIISubcase::S1b || c.subcase == CaseIIISubcase::S2b;
    return shape && c.alpha[1] <= m2deg && c.alpha[2] == m3deg;
}

// Theorem-level crosscheck for d = 3: s_Q = r_Q forces a Cohen-Macaulay cone,
// and for non-symmetric semigroups the index of nilpotency obeys
// max(alpha_2 + alpha_13 - 2, alpha_3 + alpha_12 - 2).
struct SRCrosscheck {
    long long s_q = 0;
    long long r_q = 0;
    bool implication_holds = true;  // s = r -> is_cm
    std::optional<bool> formula_ok; // non-symmetric s-formula
};

inline SRCrosscheck s_equals_r_crosscheck(const NumericalSemigroup& G, const HerzogClass& cls,
                                          bool cone_is_cm) {
    require(G.dim() == 3, errc::invalid_input, "crosscheck needs d = 3");
    SRCrosscheck out;
    out.s_q = index_of_nilpotency(G);
    out.r_q = reduction_number(G);
    if (out.s_q == out.r_q && !cone_is_cm) out.implication_holds = false;
    if (std::holds_alternative<HerzogNonSymmetric>(cls)) {
        const auto& c = std::get<HerzogNonSymmetric>(cls);
        long long expect =
            std::max(c.alpha[1] + c.off[0][2] - 2, c.alpha[2] + c.off[0][1] - 2);
        out.formula_ok = out.s_q == expect;
    }
    return out;
}

// Classification verdicts and invariants of one tangent cone. The
// invariants h0_length = 0 <=> cohen_macaulay <=> buchsbaum_level = 0 and
// gorenstein => cohen_macaulay are enforced by the analysis checks.
struct TangentConeReport {
    int mu_i = 0;
    int mu_istar = 0;
    bool cohen_macaulay = false;
    long long h0_length = 0;
    int buchsbaum_level = 0;
    std::optional<bool> gorenstein;
    std::vector<std::string> istar_generators;
    std::vector<std::string> h0_basis;
    bool h0_monomial_spanning = true;
    std::vector<long long> hilbert;

    bool operator==(const TangentConeReport&) const = default;
};

} // namespace tcone
