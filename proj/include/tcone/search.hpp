#pragma once

#include <atomic>
#include <sstream>
#include <thread>

#include "tcone/analysis.hpp"
#include "tcone/enumerate.hpp"

namespace tcone {

// Batch conjecture explorer behind `tcone search`. Instances are analyzed
// independently across a worker pool; the reducer merges results in input
// order, so output is deterministic for a fixed instance list.

enum class SearchCheck { Mu13, GorensteinChain, Dagger, Buchsbaum };

inline const char* to_string(SearchCheck c) {
    switch (c) {
        case SearchCheck::Mu13: return "mu13";
        case SearchCheck::GorensteinChain: return "gorenstein-chain";
        case SearchCheck::Dagger: return "dagger";
        case SearchCheck::Buchsbaum: return "buchsbaum";
    }
    return "?";
}

inline std::optional<SearchCheck> parse_check(const std::string& s) {
    if (s == "mu13") return SearchCheck::Mu13;
    if (s == "gorenstein-chain") return SearchCheck::GorensteinChain;
    if (s == "dagger") return SearchCheck::Dagger;
    if (s == "buchsbaum") return SearchCheck::Buchsbaum;
    return std::nullopt;
}

struct SearchOptions {
    int dim = 3;
    long long max_gen = 20;
    SearchCheck check = SearchCheck::Mu13;
    int workers = 1;
    bool symmetric_only = false;
    bool bresinsky_d5 = false;
    // Caps keep accidental huge enumerations out of the CLI.
    long long cap_dim3 = 400, cap_dim4 = 150, cap_dim5 = 80;
};

struct SearchRow {
    std::vector<long long> gens;
    int mu_i = 0;
    int mu_istar = 0;
    bool symmetric = false;
    bool cm = false;
    std::optional<bool> gorenstein; // structural (d <= 4) or via the dagger
                                    // criterion for symmetric CM cones (d = 5)
    long long h0_length = 0;
    int buchsbaum_level = 0;
    std::vector<std::string> violations;
};

struct SearchSummary {
    SearchOptions options;
    long long instances = 0;
    int max_mu_i = 0;
    std::vector<long long> argmax_mu_i;
    int max_mu_istar = 0;
    std::vector<long long> argmax_mu_istar;
    int max_mu_i_gorenstein = 0;
    std::vector<long long> argmax_mu_i_gorenstein;
    int max_mu_istar_gorenstein = 0;
    std::vector<long long> argmax_mu_istar_gorenstein;
    long long gorenstein_instances = 0;
    std::vector<SearchRow> violations;
    std::vector<SearchRow> rows; // populated when keep_rows
};

namespace detail {

inline SearchRow search_instance(const std::vector<long long>& gens, SearchCheck check) {
    SearchRow row;
    row.gens = gens;
    NumericalSemigroup G = NumericalSemigroup::create(gens);
    const int d = G.dim();
    row.symmetric = G.is_symmetric();

    DefiningIdeal I = defining_ideal(G);
    row.mu_i = I.mu();
    StandardBasis sb = standard_basis(I.generators, I.order, G.weights());
    InitialFormIdeal ifi = initial_form_ideal(sb);
    row.mu_istar = mu(ifi);
    row.cm = is_cm(ifi);
    if (d <= 4) {
        row.gorenstein = is_gorenstein(ifi);
    } else if (row.symmetric && row.cm) {
        // Bryant: for symmetric G with Cohen-Macaulay cone, Gorenstein is
        // equivalent to the dagger condition, in any embedding dimension.
        row.gorenstein = G.dagger_condition();
    } else {
        row.gorenstein = false;
    }

    auto violation = [&](const std::string& what) {
        std::string g;
        for (auto v : gens) g += (g.empty() ? "<" : ",") + std::to_string(v);
        row.violations.push_back(g + ">: " + what);
    };

    switch (check) {
        case SearchCheck::Mu13: {
            if (row.mu_i > 13) violation("mu(I) = " + std::to_string(row.mu_i) + " exceeds 13");
            if (row.gorenstein.value_or(false) && row.mu_istar > 13)
                violation("Gorenstein cone with mu(I*) = " + std::to_string(row.mu_istar));
            break;
        }
        case SearchCheck::GorensteinChain: {
            if (!row.gorenstein.value_or(false)) break;
            GotoReport rep = equality_chain_report(G, true);
            if (!rep.chain_all_equal) violation("equality chain broken on a Gorenstein cone");
            if (!rep.ddag_equality) violation("(ddag) strict on a Gorenstein cone");
            if (!rep.apery_dominated.value_or(false))
                violation("Apery element not dominated by f + n1");
            break;
        }
        case SearchCheck::Dagger: {
            require(d <= 4, errc::invalid_input, "dagger check needs dim <= 4");
            if (!row.symmetric || !row.cm) break;
            if (G.dagger_condition() != row.gorenstein.value_or(false))
                violation("dagger condition disagrees with the Gorenstein verdict");
            break;
        }
        case SearchCheck::Buchsbaum: {
            require(d == 3, errc::invalid_input, "buchsbaum check needs dim = 3");
            QuotientBlocks qb(ifi);
            H0Data h0 = h0_compute(qb, ifi);
            row.h0_length = h0.length;
            row.buchsbaum_level = h0.buchsbaum_level;
            bool buchsbaum = h0.buchsbaum_level <= 1;
            bool two_buchsbaum = h0.buchsbaum_level <= 2;
            if (buchsbaum != (h0.length <= 1)) violation("Buchsbaum <!=> h0 length <= 1");
            if (two_buchsbaum != (h0.length <= 2)) violation("2-Buchsbaum <!=> h0 length <= 2");
            if (buchsbaum && !row.cm && row.mu_istar != 4)
                violation("Buchsbaum not CM with mu(I*) = " + std::to_string(row.mu_istar));
            if (two_buchsbaum && row.mu_istar > 4)
                violation("2-Buchsbaum with mu(I*) = " + std::to_string(row.mu_istar));
            break;
        }
    }
    return row;
}

} // namespace detail

inline SearchSummary run_search(const SearchOptions& opt, bool keep_rows = false) {
    require(opt.dim >= 3 && opt.dim <= 5, errc::invalid_input, "dim must be in 3..5");
    long long cap = opt.dim == 3 ? opt.cap_dim3 : (opt.dim == 4 ? opt.cap_dim4 : opt.cap_dim5);
    require(opt.max_gen <= cap, errc::cap_exceeded,
            "max-gen " + std::to_string(opt.max_gen) + " exceeds the dim-" +
                std::to_string(opt.dim) + " cap " + std::to_string(cap));
    require(opt.check != SearchCheck::Dagger || opt.dim <= 4, errc::invalid_input,
            "the dagger check needs dim <= 4");
    require(opt.check != SearchCheck::Buchsbaum || opt.dim == 3, errc::invalid_input,
            "the buchsbaum check needs dim = 3");

    std::vector<std::vector<long long>> instances;
    EnumerateOptions eo;
    eo.symmetric_only = opt.symmetric_only;
    eo.bresinsky_d5 = opt.bresinsky_d5;
    enumerate_semigroups(opt.dim, opt.max_gen,
                         [&](const std::vector<long long>& g) { instances.push_back(g); }, eo);

    std::vector<SearchRow> rows(instances.size());
    std::atomic<size_t> next{0};
    int workers = std::max(1, opt.workers);
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            try {
                rows[i] = detail::search_instance(instances[i], opt.check);
            } catch (const error& e) {
                rows[i].gens = instances[i];
                rows[i].violations.push_back(std::string("error: ") + e.what());
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    SearchSummary sum;
    sum.options = opt;
    sum.instances = static_cast<long long>(rows.size());
    for (const SearchRow& r : rows) {
        if (r.mu_i > sum.max_mu_i) {
            sum.max_mu_i = r.mu_i;
            sum.argmax_mu_i = r.gens;
        }
        if (r.mu_istar > sum.max_mu_istar) {
            sum.max_mu_istar = r.mu_istar;
            sum.argmax_mu_istar = r.gens;
        }
        if (r.gorenstein.value_or(false)) {
            ++sum.gorenstein_instances;
            if (r.mu_i > sum.max_mu_i_gorenstein) {
                sum.max_mu_i_gorenstein = r.mu_i;
                sum.argmax_mu_i_gorenstein = r.gens;
            }
            if (r.mu_istar > sum.max_mu_istar_gorenstein) {
                sum.max_mu_istar_gorenstein = r.mu_istar;
                sum.argmax_mu_istar_gorenstein = r.gens;
            }
        }
        if (!r.violations.empty()) sum.violations.push_back(r);
    }
    if (keep_rows) sum.rows = std::move(rows);
    return sum;
}

inline json to_json(const SearchSummary& s) {
    json j;
    j["schema_version"] = 1;
    j["dim"] = s.options.dim;
    j["max_gen"] = s.options.max_gen;
    j["check"] = to_string(s.options.check);
    j["symmetric_only"] = s.options.symmetric_only;
    j["bresinsky_d5_filter"] = s.options.bresinsky_d5;
    j["instances"] = s.instances;
    j["gorenstein_instances"] = s.gorenstein_instances;
    j["max_mu_i"] = s.max_mu_i;
    j["argmax_mu_i"] = s.argmax_mu_i;
    j["max_mu_istar"] = s.max_mu_istar;
    j["argmax_mu_istar"] = s.argmax_mu_istar;
    j["max_mu_i_gorenstein"] = s.max_mu_i_gorenstein;
    j["argmax_mu_i_gorenstein"] = s.argmax_mu_i_gorenstein;
    j["max_mu_istar_gorenstein"] = s.max_mu_istar_gorenstein;
    j["argmax_mu_istar_gorenstein"] = s.argmax_mu_istar_gorenstein;
    json viol = json::array();
    for (const SearchRow& r : s.violations) {
        json v;
        v["generators"] = r.gens;
        v["messages"] = r.violations;
        viol.push_back(v);
    }
    j["violations"] = viol;
    return j;
}

inline std::string to_csv(const SearchSummary& s) {
    std::ostringstream out;
    out << "generators;mu_i;mu_istar;symmetric;cm;gorenstein;h0_length;buchsbaum_level;violations\n";
    for (const SearchRow& r : s.rows) {
        std::string g;
        for (auto v : r.gens) g += (g.empty() ? "" : " ") + std::to_string(v);
        out << g << ";" << r.mu_i << ";" << r.mu_istar << ";" << r.symmetric << ";" << r.cm << ";";
        if (r.gorenstein) out << *r.gorenstein;
        out << ";" << r.h0_length << ";" << r.buchsbaum_level << ";";
        for (size_t i = 0; i < r.violations.size(); ++i)
            out << (i ? " | " : "") << r.violations[i];
        out << "\n";
    }
    return out.str();
}

inline std::string to_text(const SearchSummary& s) {
    std::ostringstream out;
    auto gens = [](const std::vector<long long>& g) {
        std::string t;
        for (auto v : g) t += (t.empty() ? "<" : ",") + std::to_string(v);
        return t.empty() ? std::string("-") : t + ">";
    };
    out << "search dim=" << s.options.dim << " max-gen=" << s.options.max_gen
        << " check=" << to_string(s.options.check) << "\n";
    out << "  instances             " << s.instances << "\n";
    out << "  gorenstein instances  " << s.gorenstein_instances << "\n";
    out << "  max mu(I)             " << s.max_mu_i << "  at " << gens(s.argmax_mu_i) << "\n";
    out << "  max mu(I*)            " << s.max_mu_istar << "  at " << gens(s.argmax_mu_istar)
        << "\n";
    out << "  max mu(I) gorenstein  " << s.max_mu_i_gorenstein << "  at "
        << gens(s.argmax_mu_i_gorenstein) << "\n";
    out << "  max mu(I*) gorenstein " << s.max_mu_istar_gorenstein << "  at "
        << gens(s.argmax_mu_istar_gorenstein) << "\n";
    out << "  violations            " << s.violations.size() << "\n";
    for (const SearchRow& r : s.violations)
        for (const auto& v : r.violations) out << "    " << v << "\n";
    return out.str();
}

} // namespace tcone
