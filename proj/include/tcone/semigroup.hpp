#pragma once

#include <algorithm>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "tcone/rational.hpp"

namespace tcone {

struct Factorization {
    std::vector<long long> coeffs;
    long long value = 0;
    long long length = 0;

    bool dominated_by(const Factorization& o) const {
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] > o.coeffs[i]) return false;
        return true;
    }

    auto operator<=>(const Factorization&) const = default;
};

struct AperySet {
    long long modulus = 0;
    std::vector<long long> elements; // sorted ascending, one per residue class
};

// A numerical semigroup with minimal generators n1 < ... < nd, gcd 1.
// Immutable after construction; the lazily grown ord/min-ord tables and the
// factorization cache are guarded for shared use.
class NumericalSemigroup {
public:
    static NumericalSemigroup create(std::vector<long long> gens) {
        require(!gens.empty(), errc::empty_input, "no generators");
        for (long long g : gens)
            require(g >= 1, errc::invalid_input, "generators must be positive");
        std::sort(gens.begin(), gens.end());
        for (size_t i = 1; i < gens.size(); ++i)
            require(gens[i] != gens[i - 1], errc::not_minimal,
                    "duplicate generator " + std::to_string(gens[i]));
        long long g = 0;
        for (long long x : gens) g = std::gcd(g, x);
        require(g == 1, errc::gcd_not_one, "gcd of generators is " + std::to_string(g));
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<long long> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (!others.empty() && representable(others, gens[i]))
                fail(errc::not_minimal,
                     std::to_string(gens[i]) + " is generated by the other generators");
        }
        return NumericalSemigroup(std::move(gens));
    }

    // True iff gens is a strictly increasing minimal generating set with
    // gcd 1 (the create() preconditions, without throwing).
    static bool is_minimal_generating_set(const std::vector<long long>& gens) {
        if (gens.empty()) return false;
        long long g = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i] < 1) return false;
            if (i > 0 && gens[i] <= gens[i - 1]) return false;
            g = std::gcd(g, gens[i]);
        }
        if (g != 1) return false;
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<long long> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (!others.empty() && representable(others, gens[i])) return false;
        }
        return true;
    }

    const std::vector<long long>& generators() const { return gens_; }
    int dim() const { return static_cast<int>(gens_.size()); }
    long long multiplicity() const { return gens_.front(); }
    long long max_generator() const { return gens_.back(); }
    long long frobenius() const { return frobenius_; }

    bool contains(long long z) const {
        if (z < 0) return false;
        if (z > frobenius_) return true;
        return member_[static_cast<size_t>(z)];
    }

    AperySet apery(long long e) const {
        require(e > 0 && contains(e), errc::not_member,
                std::to_string(e) + " is not a nonzero member");
        AperySet ap;
        ap.modulus = e;
        std::vector<long long> slot(static_cast<size_t>(e), -1);
        long long found = 0;
        for (long long z = 0; found < e; ++z) {
            if (!contains(z)) continue;
            long long r = z % e;
            if (slot[static_cast<size_t>(r)] < 0) {
                slot[static_cast<size_t>(r)] = z;
                ++found;
            }
        }
        ap.elements = slot;
        std::sort(ap.elements.begin(), ap.elements.end());
        return ap;
    }

    // All nonnegative solutions of sum a_i n_i = z, lexicographically sorted.
    std::vector<Factorization> factorizations(long long z) const {
        if (z < 0 || !contains(z)) return {};
        {
            std::lock_guard<std::mutex> lock(caches_->mutex);
            auto it = caches_->facts.find(z);
            if (it != caches_->facts.end()) return it->second;
        }
        std::vector<Factorization> out;
        std::vector<long long> cur(gens_.size(), 0);
        enumerate(z, 0, cur, out);
        {
            std::lock_guard<std::mutex> lock(caches_->mutex);
            if (caches_->facts.size() >= kFactCacheLimit) caches_->facts.clear();
            caches_->facts[z] = out;
        }
        return out;
    }

    // ord(z) = max factorization length, min_ord the minimum; DP backed.
    long long ord(long long z) const {
        require(z >= 0 && contains(z), errc::not_member,
                std::to_string(z) + " is not a member");
        std::lock_guard<std::mutex> lock(caches_->mutex);
        ensure_ord_tables(z);
        return caches_->ord[static_cast<size_t>(z)];
    }

    long long min_ord(long long z) const {
        require(z >= 0 && contains(z), errc::not_member,
                std::to_string(z) + " is not a member");
        std::lock_guard<std::mutex> lock(caches_->mutex);
        ensure_ord_tables(z);
        return caches_->min_ord[static_cast<size_t>(z)];
    }

    Rational elasticity(long long z) const {
        require(z > 0 && contains(z), errc::not_member,
                std::to_string(z) + " is not a positive member");
        return Rational(ord(z), min_ord(z));
    }

    bool is_symmetric() const { return symmetric_; }

    // x precedes y iff some maximal-length factorization of x is dominated
    // componentwise by a maximal-length factorization of y.
    bool precedes(long long x, long long y) const {
        require(contains(x), errc::not_member, "x not a member");
        require(contains(y), errc::not_member, "y not a member");
        auto fx = factorizations(x);
        auto fy = factorizations(y);
        long long ox = ord(x), oy = ord(y);
        for (const auto& a : fx) {
            if (a.length != ox) continue;
            for (const auto& b : fy) {
                if (b.length != oy) continue;
                if (a.dominated_by(b)) return true;
            }
        }
        return false;
    }

    // Condition (dagger): every Apery pair summing to the top element has
    // additive orders.
    bool dagger_condition() const {
        AperySet ap = apery(multiplicity());
        long long top = ap.elements.back();
        std::vector<long long> ords(ap.elements.size());
        for (size_t i = 0; i < ap.elements.size(); ++i) ords[i] = ord(ap.elements[i]);
        std::map<long long, size_t> index;
        for (size_t i = 0; i < ap.elements.size(); ++i) index[ap.elements[i]] = i;
        long long otop = ords.back();
        for (size_t i = 0; i < ap.elements.size(); ++i) {
            auto it = index.find(top - ap.elements[i]);
            if (it == index.end()) continue;
            if (ords[i] + ords[it->second] != otop) return false;
        }
        return true;
    }

    // alpha_i = min { a >= 1 : a * n_i lies in the monoid generated by the
    // other generators }. The reduced generator set may have gcd > 1.
    long long alpha(int i) const {
        require(i >= 0 && i < dim(), errc::invalid_input, "generator index out of range");
        require(dim() >= 2, errc::invalid_input, "alpha needs at least two generators");
        std::vector<long long> others;
        for (int j = 0; j < dim(); ++j)
            if (j != i) others.push_back(gens_[j]);
        for (long long a = 1;; ++a) {
            require(a <= kAlphaSearchLimit, errc::internal, "alpha search did not terminate");
            if (representable(others, a * gens_[i])) return a;
        }
    }

    std::vector<long long> weights() const { return gens_; }

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

private:
    static constexpr size_t kFactCacheLimit = 4096;
    static constexpr long long kAlphaSearchLimit = 1000000;

    struct Caches {
        std::mutex mutex;
        std::vector<long long> ord;
        std::vector<long long> min_ord;
        std::map<long long, std::vector<Factorization>> facts;
    };

    explicit NumericalSemigroup(std::vector<long long> gens)
        : gens_(std::move(gens)), caches_(std::make_shared<Caches>()) {
        compute_membership();
        symmetric_ = compute_symmetric();
    }

    // Membership of z in the monoid generated by gens (gcd may exceed 1).
    static bool representable(const std::vector<long long>& gens, long long z) {
        if (z < 0) return false;
        std::vector<char> table(static_cast<size_t>(z) + 1, 0);
        table[0] = 1;
        for (long long v = 1; v <= z; ++v)
            for (long long g : gens)
                if (v >= g && table[static_cast<size_t>(v - g)]) {
                    table[static_cast<size_t>(v)] = 1;
                    break;
                }
        return table[static_cast<size_t>(z)];
    }

    void compute_membership() {
        if (gens_.front() == 1) {
            frobenius_ = -1;
            member_ = {1};
            return;
        }
        long long n1 = gens_.front();
        size_t size = static_cast<size_t>(std::max<long long>(gens_.back() * 2, 64));
        for (;;) {
            member_.assign(size, 0);
            member_[0] = 1;
            long long run = 0;
            for (size_t v = 1; v < size; ++v) {
                for (long long g : gens_)
                    if (static_cast<long long>(v) >= g && member_[v - static_cast<size_t>(g)]) {
                        member_[v] = 1;
                        break;
                    }
                run = member_[v] ? run + 1 : 0;
                if (run == n1) {
                    frobenius_ = static_cast<long long>(v) - n1;
                    member_.resize(static_cast<size_t>(frobenius_ + 1));
                    return;
                }
            }
            size *= 2;
        }
    }

    bool compute_symmetric() const {
        if (frobenius_ < 0) return true;
        for (long long z = 0; z <= frobenius_; ++z)
            if (contains(z) == contains(frobenius_ - z)) return false;
        return true;
    }

    void enumerate(long long rem, size_t i, std::vector<long long>& cur,
                   std::vector<Factorization>& out) const {
        if (i + 1 == gens_.size()) {
            if (rem % gens_[i] == 0) {
                cur[i] = rem / gens_[i];
                Factorization f;
                f.coeffs = cur;
                f.value = 0;
                f.length = 0;
                for (size_t j = 0; j < cur.size(); ++j) {
                    f.value += cur[j] * gens_[j];
                    f.length += cur[j];
                }
                out.push_back(std::move(f));
                cur[i] = 0;
            }
            return;
        }
        for (long long a = 0; a * gens_[i] <= rem; ++a) {
            cur[i] = a;
            enumerate(rem - a * gens_[i], i + 1, cur, out);
        }
        cur[i] = 0;
    }

    // Pre: caches_->mutex held.
    void ensure_ord_tables(long long z) const {
        auto& ord = caches_->ord;
        auto& mord = caches_->min_ord;
        if (static_cast<long long>(ord.size()) > z) return;
        size_t old = ord.size();
        size_t want = static_cast<size_t>(z) + 1;
        if (old == 0) {
            // Seed with a window wide enough for the Apery/conductor uses.
            want = std::max(want,
                            static_cast<size_t>(std::max<long long>(frobenius_, 0) +
                                                2 * gens_.back() + 1));
        }
        ord.resize(want, -1);
        mord.resize(want, -1);
        ord[0] = 0;
        mord[0] = 0;
        for (size_t v = std::max<size_t>(old, 1); v < want; ++v) {
            if (!contains(static_cast<long long>(v))) continue;
            long long best = -1, least = -1;
            for (long long g : gens_) {
                if (static_cast<long long>(v) < g) continue;
                size_t p = v - static_cast<size_t>(g);
                if (ord[p] < 0) continue;
                best = std::max(best, ord[p] + 1);
                least = least < 0 ? mord[p] + 1 : std::min(least, mord[p] + 1);
            }
            ord[v] = best;
            mord[v] = least;
        }
    }

    std::vector<long long> gens_;
    long long frobenius_ = -1;
    std::vector<char> member_; // 0 .. frobenius
    bool symmetric_ = false;
    std::shared_ptr<Caches> caches_; // copies share the same caches
};

} // namespace tcone
