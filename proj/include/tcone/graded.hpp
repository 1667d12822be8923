#pragma once

#include <map>

#include "tcone/linalg.hpp"
#include "tcone/standard_basis.hpp"

namespace tcone {

namespace graded {

// Monomials of degree n and weight w with per-variable exponent caps
// (cap < 0 means unbounded). Prunes on the reachable weight window.
inline void capped_fiber(int nv, std::span<const long long> w, int n, long long weight,
                         std::span<const int> caps, std::vector<Monomial>& out) {
    Monomial cur = Monomial::unit(nv);
    auto rec = [&](auto&& self, int i, int rem, long long wrem) -> void {
        if (wrem < 0) return;
        if (i == nv) {
            if (rem == 0 && wrem == 0) out.push_back(cur);
            return;
        }
        if (wrem < static_cast<long long>(rem) * w[i] ||
            wrem > static_cast<long long>(rem) * w[nv - 1])
            return;
        int hi = caps[i] >= 0 ? std::min(rem, caps[i]) : rem;
        for (int v = 0; v <= hi; ++v) {
            long long wr = wrem - static_cast<long long>(v) * w[i];
            if (wr < 0) break;
            cur.e[i] = v;
            self(self, i + 1, rem - v, wr);
        }
        cur.e[i] = 0;
    };
    rec(rec, 0, n, weight);
}

} // namespace graded

// Exact graded-piece computations for the quotient by a bihomogeneous ideal
// (monomials and balanced binomials, weight-homogeneous). All linear algebra
// is projected onto the "region" monomials with x_i-exponent below the
// minimal pure power k_i in the ideal for i >= 2; monomials outside the
// region lie in the ideal, so quotient and saturation data are unchanged.
class QuotientBlocks {
public:
    explicit QuotientBlocks(const InitialFormIdeal& ifi)
        : weights_(ifi.weights), nv_(static_cast<int>(ifi.weights.size())) {
        for (const Element& g : ifi.generators) {
            GenData d;
            if (std::holds_alternative<Monomial>(g)) {
                d.mono = std::get<Monomial>(g);
                d.degree = d.mono->degree();
                d.weight = d.mono->weight(weights_);
            } else {
                const Binomial& b = std::get<Binomial>(g);
                d.bin = b;
                d.degree = b.plus.degree();
                d.weight = b.plus.weight(weights_);
            }
            gens_.push_back(std::move(d));
        }
        compute_caps();
        enumerate_bounded_parts();
    }

    int nvars() const { return nv_; }
    long long multiplicity() const { return weights_.front(); }
    const std::vector<int>& caps() const { return caps_; }

    bool in_region(const Monomial& m) const {
        for (int i = 1; i < nv_; ++i)
            if (caps_[i] >= 0 && m.e[i] >= caps_[i]) return false;
        return true;
    }

    struct Block {
        std::vector<Monomial> monos;      // region monomials, sorted
        std::map<Monomial, int> index;
        RowSpace rows{0};                 // projected ideal rows
    };

    // Region monomials of one block fall on the x1-towers of the bounded
    // parts sharing theta = weight - n1 * degree, an x1-shift invariant.
    const std::map<long long, std::vector<Monomial>>& chains() const { return chains_; }

    const Block& block(int n, long long w) {
        auto key = std::make_pair(n, w);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Block blk;
        auto chain = chains_.find(w - static_cast<long long>(n) * weights_[0]);
        if (chain != chains_.end())
            for (const auto& u : chain->second) {
                int t = n - u.degree();
                if (t < 0) continue;
                Monomial m = u;
                m.e[0] += t;
                blk.monos.push_back(m);
            }
        std::sort(blk.monos.begin(), blk.monos.end());
        for (size_t i = 0; i < blk.monos.size(); ++i) blk.index[blk.monos[i]] = static_cast<int>(i);
        blk.rows = RowSpace(static_cast<int>(blk.monos.size()));
        if (!blk.monos.empty()) {
            std::vector<int> mult_caps(static_cast<size_t>(nv_), -1);
            for (const GenData& g : gens_) {
                if (g.degree > n || g.weight > w) continue;
                // Multipliers whose product can touch the region; generators
                // already outside it on both sides contribute zero rows.
                bool feasible = true;
                for (int i = 1; i < nv_ && feasible; ++i) {
                    int base = g.mono ? g.mono->e[i]
                                      : std::min(g.bin->plus.e[i], g.bin->minus.e[i]);
                    if (caps_[i] < 0) {
                        mult_caps[i] = -1;
                    } else if (caps_[i] - 1 - base < 0) {
                        feasible = false;
                    } else {
                        mult_caps[i] = caps_[i] - 1 - base;
                    }
                }
                if (!feasible) continue;
                mult_caps[0] = -1;
                std::vector<Monomial> mults;
                graded::capped_fiber(nv_, weights_, n - g.degree, w - g.weight, mult_caps, mults);
                for (const Monomial& u : mults) {
                    std::vector<long long> row(blk.monos.size(), 0);
                    bool nonzero = false;
                    auto put = [&](const Monomial& m, long long c) {
                        auto pos = blk.index.find(m);
                        if (pos != blk.index.end()) {
                            row[pos->second] += c;
                            nonzero = true;
                        }
                    };
                    if (g.mono) {
                        put(u * *g.mono, 1);
                    } else {
                        put(u * g.bin->plus, 1);
                        put(u * g.bin->minus, -1);
                    }
                    if (nonzero) blk.rows.insert(std::move(row));
                }
            }
        }
        return cache_.emplace(key, std::move(blk)).first->second;
    }

    // One x1-tower of blocks, assembled at working degree D. Columns are the
    // chain's bounded parts in descending degree, so the degree-n block sits
    // on the column suffix with degree <= n; every ideal row at source
    // degree n appears among the D-rows whose multiplier carries an
    // x1-exponent of at least D - n (row_nmin records that threshold).
    struct ChainSystem {
        std::vector<Monomial> columns;            // degree descending
        std::vector<int> coldeg;
        std::vector<std::vector<long long>> rows; // over columns
        std::vector<int> row_nmin;
    };

    ChainSystem chain_system(long long theta, int D) {
        ChainSystem sys;
        const auto& members = chains_.at(theta);
        for (auto it = members.rbegin(); it != members.rend(); ++it)
            if (it->degree() <= D) {
                sys.columns.push_back(*it);
                sys.coldeg.push_back(it->degree());
            }
        std::map<Monomial, int> col;
        for (size_t i = 0; i < sys.columns.size(); ++i) col[sys.columns[i]] = static_cast<int>(i);
        const long long w = theta + static_cast<long long>(D) * weights_[0];
        std::vector<int> mult_caps(static_cast<size_t>(nv_), -1);
        for (const GenData& g : gens_) {
            if (g.degree > D || g.weight > w) continue;
            bool feasible = true;
            for (int i = 1; i < nv_ && feasible; ++i) {
                int base =
                    g.mono ? g.mono->e[i] : std::min(g.bin->plus.e[i], g.bin->minus.e[i]);
                if (caps_[i] < 0) mult_caps[i] = -1;
                else if (caps_[i] - 1 - base < 0) feasible = false;
                else mult_caps[i] = caps_[i] - 1 - base;
            }
            if (!feasible) continue;
            mult_caps[0] = -1;
            std::vector<Monomial> mults;
            graded::capped_fiber(nv_, weights_, D - g.degree, w - g.weight, mult_caps, mults);
            for (const Monomial& u : mults) {
                std::vector<long long> row(sys.columns.size(), 0);
                bool nonzero = false;
                auto put = [&](Monomial prod, long long cc) {
                    Monomial part = prod;
                    part.e[0] = 0;
                    auto pos = col.find(part);
                    if (pos != col.end() && in_region(prod)) {
                        row[pos->second] += cc;
                        nonzero = true;
                    }
                };
                if (g.mono) {
                    put(u * *g.mono, 1);
                } else {
                    put(u * g.bin->plus, 1);
                    put(u * g.bin->minus, -1);
                }
                if (!nonzero) continue;
                sys.rows.push_back(std::move(row));
                sys.row_nmin.push_back(D - u.e[0]);
            }
        }
        return sys;
    }

    // Ideal membership of a monomial at its own (degree, weight).
    bool in_ideal(const Monomial& m) {
        if (!in_region(m)) return true;
        const Block& blk = block(m.degree(), m.weight(weights_));
        auto it = blk.index.find(m);
        require(it != blk.index.end(), errc::internal, "region monomial missing from block");
        std::vector<long long> unit(blk.monos.size(), 0);
        unit[it->second] = 1;
        return blk.rows.contains(std::move(unit));
    }

    // Membership of a coordinate vector (over blk.monos) in the ideal block.
    bool coords_in_ideal(const Block& blk, std::vector<long long> coords) {
        return blk.rows.contains(std::move(coords));
    }

    // Hilbert function of the quotient at degree n.
    long long hilbert(int n) {
        long long dim = 0;
        for (long long w : weights_at_degree(n)) {
            const Block& blk = block(n, w);
            dim += static_cast<long long>(blk.monos.size()) - blk.rows.rank();
        }
        return dim;
    }

    // All weights with region monomials at degree n.
    std::vector<long long> weights_at_degree(int n) const {
        std::vector<long long> ws;
        for (const auto& [theta, members] : chains_)
            if (members.front().degree() <= n)
                ws.push_back(theta + static_cast<long long>(n) * weights_[0]);
        return ws;
    }

    const std::vector<long long>& weights() const { return weights_; }

private:
    struct GenData {
        std::optional<Monomial> mono;
        std::optional<Binomial> bin;
        int degree = 0;
        long long weight = 0;
    };

    // Minimal pure power x_i^{k} in the ideal for each i >= 2; k <= n1 is
    // guaranteed since x_i^{n1} is the initial form of x_i^{n1} - x_1^{n_i}.
    void compute_caps() {
        caps_.assign(static_cast<size_t>(nv_), -1);
        for (int i = 1; i < nv_; ++i) {
            int found = -1;
            for (int k = 1; k <= static_cast<int>(weights_[0]) && found < 0; ++k) {
                if (full_membership(Monomial::var(nv_, i, k))) found = k;
            }
            require(found > 0 || nv_ == 1, errc::internal,
                    "no pure power of x" + std::to_string(i + 1) + " below the multiplicity");
            caps_[i] = found;
        }
    }

    // Unprojected membership test, used only to bootstrap the caps.
    bool full_membership(const Monomial& m) const {
        int n = m.degree();
        long long w = m.weight(weights_);
        std::vector<Monomial> fiber = degree_weight_fiber(nv_, weights_, n, w);
        std::map<Monomial, int> index;
        for (size_t i = 0; i < fiber.size(); ++i) index[fiber[i]] = static_cast<int>(i);
        RowSpace rows(static_cast<int>(fiber.size()));
        std::vector<int> nocaps(static_cast<size_t>(nv_), -1);
        for (const GenData& g : gens_) {
            if (g.degree > n || g.weight > w) continue;
            std::vector<Monomial> mults;
            graded::capped_fiber(nv_, weights_, n - g.degree, w - g.weight, nocaps, mults);
            for (const Monomial& u : mults) {
                std::vector<long long> row(fiber.size(), 0);
                if (g.mono) {
                    row[index.at(u * *g.mono)] += 1;
                } else {
                    row[index.at(u * g.bin->plus)] += 1;
                    row[index.at(u * g.bin->minus)] -= 1;
                }
                rows.insert(std::move(row));
            }
        }
        std::vector<long long> unit(fiber.size(), 0);
        unit[index.at(m)] = 1;
        return rows.contains(std::move(unit));
    }

    void enumerate_bounded_parts() {
        Monomial cur = Monomial::unit(nv_);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == nv_) {
                bounded_.push_back(cur);
                return;
            }
            int hi = caps_[i] >= 0 ? caps_[i] - 1 : 0;
            for (int v = 0; v <= hi; ++v) {
                cur.e[i] = v;
                self(self, i + 1);
            }
            cur.e[i] = 0;
        };
        // x1 is never capped; bounded parts fix e[0] = 0.
        cur.e[0] = 0;
        rec(rec, 1);
        for (const auto& u : bounded_)
            chains_[u.weight(weights_) - static_cast<long long>(u.degree()) * weights_[0]]
                .push_back(u);
        for (auto& [theta, members] : chains_)
            std::sort(members.begin(), members.end(), [](const Monomial& a, const Monomial& b) {
                return std::tuple(a.degree(), a) < std::tuple(b.degree(), b);
            });
    }

    std::vector<long long> weights_;
    int nv_;
    std::vector<GenData> gens_;
    std::vector<int> caps_;
    std::vector<Monomial> bounded_; // region monomials with e[0] = 0
    std::map<long long, std::vector<Monomial>> chains_; // theta -> parts, degree ascending
    std::map<std::pair<int, long long>, Block> cache_;
};

} // namespace tcone
