#pragma once

#include <functional>

#include "tcone/semigroup.hpp"

namespace tcone {

struct EnumerateOptions {
    bool symmetric_only = false;
    // Bresinsky's d = 5 hypothesis n_1 + n_2 = n_3 + n_4; his generators are
    // not assumed increasing, so the filter accepts any disjoint index pairs
    // among the five with equal sums.
    bool bresinsky_d5 = false;
};

inline bool bresinsky_d5_condition(const std::vector<long long>& g) {
    if (g.size() != 5) return false;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = c + 1; d < 5; ++d) {
                    if (c == a || c == b || d == a || d == b) continue;
                    if (g[a] + g[b] == g[c] + g[d]) return true;
                }
    return false;
}

// Calls fn for every minimally generated numerical semigroup with the given
// embedding dimension and generators <= max_gen, in lexicographic order of
// the generator tuples.
inline void enumerate_semigroups(int dim, long long max_gen,
                                 const std::function<void(const std::vector<long long>&)>& fn,
                                 const EnumerateOptions& opt = {}) {
    require(dim >= 2, errc::invalid_input, "enumeration needs dim >= 2");
    std::vector<long long> cur(static_cast<size_t>(dim));
    auto rec = [&](auto&& self, int i, long long lo) -> void {
        if (i == dim) {
            if (!NumericalSemigroup::is_minimal_generating_set(cur)) return;
            if (opt.bresinsky_d5 && !bresinsky_d5_condition(cur)) return;
            if (opt.symmetric_only && !NumericalSemigroup::create(cur).is_symmetric()) return;
            fn(cur);
            return;
        }
        for (long long v = lo; v <= max_gen; ++v) {
            cur[static_cast<size_t>(i)] = v;
            self(self, i + 1, v + 1);
        }
    };
    // n1 = 1 gives the trivial semigroup, never minimal with dim >= 2.
    rec(rec, 0, 2);
}

} // namespace tcone
