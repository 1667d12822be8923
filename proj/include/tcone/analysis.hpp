#pragma once

#include <chrono>
#include <json.hpp>

#include "tcone/tangent_cone.hpp"

namespace tcone {

using json = nlohmann::ordered_json;

struct AnalysisOptions {
    std::optional<std::vector<int>> order_perm; // variable permutation for negdegrevlex
    bool with_h0 = true;
    bool with_goto = true;
    bool with_preceq = true;
    bool run_checks = true; // theorem crosschecks raise errc::theorem_violation
};

struct AnalysisReport {
    std::vector<long long> generators;
    long long frobenius = 0;
    long long multiplicity = 0;
    bool symmetric = false;
    std::vector<long long> apery;
    std::vector<std::string> defining_ideal;
    json classification;
    std::vector<std::string> standard_basis;
    TangentConeReport tangent;
    std::optional<GotoReport> goto_report;
    json checks;
    double timing_ms = 0; // excluded from equality and round-trip checks

    bool operator==(const AnalysisReport& o) const {
        auto key = [](const AnalysisReport& r) {
            return std::tie(r.generators, r.frobenius, r.multiplicity, r.symmetric, r.apery,
                            r.defining_ideal, r.classification, r.standard_basis, r.tangent,
                            r.checks);
        };
        bool base = key(*this) == key(o) && goto_report.has_value() == o.goto_report.has_value();
        if (!base || !goto_report) return base;
        const GotoReport &a = *goto_report, &b = *o.goto_report;
        return std::tie(a.s_q, a.r_q, a.conductor_ord, a.goto_of_generators, a.goto_special,
                        a.ord_special, a.ddag_equality, a.chain_all_equal, a.apery_dominated) ==
                   std::tie(b.s_q, b.r_q, b.conductor_ord, b.goto_of_generators, b.goto_special,
                            b.ord_special, b.ddag_equality, b.chain_all_equal,
                            b.apery_dominated) &&
               a.elasticity_special == b.elasticity_special;
    }
};

namespace detail {

inline json classification_json(const NumericalSemigroup& G, const DefiningIdeal& I,
                                std::optional<HerzogClass>& herzog,
                                std::optional<BresinskyClass>& bresinsky) {
    json j;
    if (G.dim() == 3) {
        herzog = herzog_classify(I);
        if (std::holds_alternative<HerzogSymmetric>(*herzog)) {
            const auto& s = std::get<HerzogSymmetric>(*herzog);
            j["kind"] = "herzog-symmetric";
            j["permutation"] = {s.perm[0] + 1, s.perm[1] + 1, s.perm[2] + 1};
            j["alpha_i"] = s.alpha_i;
            j["alpha_j"] = s.alpha_j;
            j["alpha_k"] = s.alpha_k;
            j["r_ki"] = s.r_ki;
            j["r_kj"] = s.r_kj;
            j["predicted_frobenius"] = s.predicted_frobenius;
        } else {
            const auto& c = std::get<HerzogNonSymmetric>(*herzog);
            j["kind"] = "herzog-nonsymmetric";
            j["alpha"] = {c.alpha[0], c.alpha[1], c.alpha[2]};
            json off;
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k)
                    if (i != k)
                        off["a" + std::to_string(i + 1) + std::to_string(k + 1)] = c.off[i][k];
            j["off"] = off;
        }
        return j;
    }
    if (G.dim() == 4 && G.is_symmetric()) {
        bresinsky = bresinsky_classify(I);
        if (std::holds_alternative<BresinskyCaseI>(*bresinsky)) {
            const auto& c = std::get<BresinskyCaseI>(*bresinsky);
            j["kind"] = "bresinsky-I";
            j["pairs"] = {{c.pair1[0] + 1, c.pair1[1] + 1}, {c.pair2[0] + 1, c.pair2[1] + 1}};
            j["alpha"] = {c.alpha[0], c.alpha[1], c.alpha[2], c.alpha[3]};
            j["beta"] = {c.beta[0], c.beta[1], c.beta[2], c.beta[3]};
        } else if (std::holds_alternative<BresinskyCaseII>(*bresinsky)) {
            const auto& c = std::get<BresinskyCaseII>(*bresinsky);
            j["kind"] = "bresinsky-II";
            j["permutation"] = {c.perm[0] + 1, c.perm[1] + 1, c.perm[2] + 1, c.perm[3] + 1};
            j["alpha"] = {c.alpha[0], c.alpha[1], c.alpha[2], c.alpha[3]};
        } else {
            const auto& c = std::get<BresinskyCaseIII>(*bresinsky);
            j["kind"] = "bresinsky-III";
            j["subcase"] = to_string(c.subcase);
            j["alpha"] = {c.alpha[0], c.alpha[1], c.alpha[2], c.alpha[3]};
            json off;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < 4; ++k)
                    if (c.off[i][k] > 0)
                        off["a" + std::to_string(i + 1) + std::to_string(k + 1)] = c.off[i][k];
            j["off"] = off;
        }
        return j;
    }
    if (G.dim() == 2) {
        j["kind"] = "hypersurface";
        return j;
    }
    j["kind"] = "unclassified";
    return j;
}

} // namespace detail

inline AnalysisReport analyze(const std::vector<long long>& gens,
                              const AnalysisOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    AnalysisReport rep;
    NumericalSemigroup G = NumericalSemigroup::create(gens);
    const int d = G.dim();
    rep.generators = G.generators();
    rep.frobenius = G.frobenius();
    rep.multiplicity = G.multiplicity();
    rep.symmetric = G.is_symmetric();
    rep.apery = G.apery(G.multiplicity()).elements;

    std::optional<MonomialOrder> order;
    if (opt.order_perm) {
        std::vector<int> perm;
        for (int v : *opt.order_perm) perm.push_back(v - 1);
        order = MonomialOrder::negdegrevlex(perm);
    }

    if (d == 1) {
        // k[[t]] itself; the cone is the polynomial ring.
        rep.classification = {{"kind", "trivial"}};
        rep.tangent.cohen_macaulay = true;
        rep.tangent.gorenstein = true;
        rep.tangent.hilbert = {1, 1, 1};
        rep.checks = json::object();
        rep.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return rep;
    }

    DefiningIdeal I = defining_ideal(G, order);
    rep.tangent.mu_i = I.mu();
    for (const auto& b : I.generators) rep.defining_ideal.push_back(to_string(b));

    StandardBasis sb = standard_basis(I.generators, I.order, G.weights());
    InitialFormIdeal ifi = initial_form_ideal(sb);
    for (const auto& e : sb.elements) rep.standard_basis.push_back(to_string(e.to_element()));
    for (const auto& g : ifi.generators) rep.tangent.istar_generators.push_back(to_string(g));
    rep.tangent.mu_istar = mu(ifi);
    rep.tangent.cohen_macaulay = is_cm(ifi);

    std::optional<HerzogClass> herzog;
    std::optional<BresinskyClass> bresinsky;
    rep.classification = detail::classification_json(G, I, herzog, bresinsky);

    QuotientBlocks qb(ifi);
    if (opt.with_h0) {
        H0Data h0 = h0_compute(qb, ifi);
        rep.tangent.h0_length = h0.length;
        rep.tangent.buchsbaum_level = h0.buchsbaum_level;
        rep.tangent.h0_monomial_spanning = h0.monomial_spanning;
        if (h0.monomial_spanning)
            for (const auto& m : h0.monomial_basis) rep.tangent.h0_basis.push_back(to_string(m));
    }
    {
        // Hilbert values until the multiplicity is reached twice in a row.
        long long n1 = G.multiplicity();
        int streak = 0;
        for (int n = 0; streak < 2 && n < 512; ++n) {
            long long v = hilbert_function(qb, n);
            rep.tangent.hilbert.push_back(v);
            streak = v == n1 ? streak + 1 : 0;
        }
    }
    if (d <= 4) rep.tangent.gorenstein = is_gorenstein(ifi);
    else if (rep.tangent.mu_istar == d - 1)
        rep.tangent.gorenstein = true; // complete-intersection cone

    if (opt.with_goto) rep.goto_report = equality_chain_report(G, opt.with_preceq);

    json checks = json::object();
    if (opt.run_checks) {
        if (opt.with_h0) {
            require((rep.tangent.h0_length == 0) == rep.tangent.cohen_macaulay,
                    errc::theorem_violation, "h0 vanishing must match Cohen-Macaulayness");
            require((rep.tangent.buchsbaum_level == 0) == rep.tangent.cohen_macaulay,
                    errc::theorem_violation, "Buchsbaum level 0 must match Cohen-Macaulayness");
            require(!rep.tangent.gorenstein.value_or(false) || rep.tangent.cohen_macaulay,
                    errc::theorem_violation, "Gorenstein must imply Cohen-Macaulay");
        }
        if (d == 3 && herzog) {
            bool fast = d3_cm_fastpath(*herzog);
            checks["d3_fastpath_agrees"] = fast == rep.tangent.cohen_macaulay;
            require(fast == rep.tangent.cohen_macaulay, errc::theorem_violation,
                    "d=3 arithmetic CM fast path disagrees with the cone");
            require(rep.tangent.cohen_macaulay == (rep.tangent.mu_istar <= 3),
                    errc::theorem_violation, "d=3 CM must match mu(I*) <= 3");
            SRCrosscheck sr = s_equals_r_crosscheck(G, *herzog, rep.tangent.cohen_macaulay);
            checks["sr_implication"] = sr.implication_holds;
            require(sr.implication_holds, errc::theorem_violation,
                    "s_Q = r_Q must force a Cohen-Macaulay cone at d = 3");
            if (sr.formula_ok) {
                checks["s_formula"] = *sr.formula_ok;
                require(*sr.formula_ok, errc::theorem_violation,
                        "non-symmetric index-of-nilpotency formula failed");
            }
        }
        if (d <= 4 && rep.symmetric && rep.tangent.cohen_macaulay && rep.tangent.gorenstein) {
            bool dag = G.dagger_condition();
            checks["lance_dagger_agrees"] = dag == *rep.tangent.gorenstein;
            require(dag == *rep.tangent.gorenstein, errc::theorem_violation,
                    "Gorenstein cone must match the dagger condition");
        }
        if (d == 4 && rep.symmetric) {
            require(rep.tangent.mu_i <= 5, errc::theorem_violation,
                    "mu(I) > 5 for symmetric d = 4");
            if (bresinsky && std::holds_alternative<BresinskyCaseIII>(*bresinsky)) {
                bool fast = d4_gorenstein_fastpath(*bresinsky);
                checks["d4_fastpath_agrees"] = fast == *rep.tangent.gorenstein;
                require(fast == *rep.tangent.gorenstein, errc::theorem_violation,
                        "Case III Gorenstein fast path disagrees with linkage");
            }
            if (rep.tangent.gorenstein && *rep.tangent.gorenstein && rep.goto_report) {
                require(rep.goto_report->chain_all_equal, errc::theorem_violation,
                        "Gorenstein cone must satisfy the full equality chain");
                require(rep.goto_report->ddag_equality, errc::theorem_violation,
                        "Gorenstein cone must give equality in (ddag)");
            }
        }
    }
    rep.checks = std::move(checks);
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Serialization.

inline json to_json(const GotoReport& g) {
    json j;
    j["s_q"] = g.s_q;
    j["r_q"] = g.r_q;
    j["conductor_order"] = g.conductor_ord;
    json gens = json::object();
    for (const auto& [k, v] : g.goto_of_generators) gens[std::to_string(k)] = v;
    j["goto_generators"] = gens;
    j["goto_special"] = g.goto_special;
    j["ord_special"] = g.ord_special;
    j["ddag_equality"] = g.ddag_equality;
    j["chain_all_equal"] = g.chain_all_equal;
    j["apery_dominated"] = g.apery_dominated ? json(*g.apery_dominated) : json(nullptr);
    j["elasticity_special"] =
        g.elasticity_special ? json(to_string(*g.elasticity_special)) : json(nullptr);
    return j;
}

inline GotoReport goto_from_json(const json& j) {
    GotoReport g;
    g.s_q = j.at("s_q").get<long long>();
    g.r_q = j.at("r_q").get<long long>();
    g.conductor_ord = j.at("conductor_order").get<long long>();
    for (const auto& [k, v] : j.at("goto_generators").items())
        g.goto_of_generators[std::stoll(k)] = v.get<long long>();
    g.goto_special = j.at("goto_special").get<long long>();
    g.ord_special = j.at("ord_special").get<long long>();
    g.ddag_equality = j.at("ddag_equality").get<bool>();
    g.chain_all_equal = j.at("chain_all_equal").get<bool>();
    if (!j.at("apery_dominated").is_null()) g.apery_dominated = j.at("apery_dominated").get<bool>();
    if (!j.at("elasticity_special").is_null()) {
        std::string s = j.at("elasticity_special").get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) g.elasticity_special = Rational(std::stoll(s));
        else
            g.elasticity_special =
                Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    return g;
}

inline json to_json(const AnalysisReport& r) {
    json j;
    j["schema_version"] = 1;
    j["generators"] = r.generators;
    j["frobenius"] = r.frobenius;
    j["multiplicity"] = r.multiplicity;
    j["symmetric"] = r.symmetric;
    j["apery"] = r.apery;
    j["defining_ideal"] = r.defining_ideal;
    j["classification"] = r.classification;
    j["standard_basis"] = r.standard_basis;
    json tc;
    tc["mu_i"] = r.tangent.mu_i;
    tc["mu_istar"] = r.tangent.mu_istar;
    tc["cohen_macaulay"] = r.tangent.cohen_macaulay;
    tc["h0_length"] = r.tangent.h0_length;
    tc["buchsbaum_level"] = r.tangent.buchsbaum_level;
    tc["gorenstein"] = r.tangent.gorenstein ? json(*r.tangent.gorenstein) : json(nullptr);
    tc["initial_forms"] = r.tangent.istar_generators;
    tc["h0_basis"] = r.tangent.h0_basis;
    tc["h0_monomial_spanning"] = r.tangent.h0_monomial_spanning;
    tc["hilbert"] = r.tangent.hilbert;
    j["tangent_cone"] = tc;
    j["goto"] = r.goto_report ? to_json(*r.goto_report) : json(nullptr);
    j["checks"] = r.checks;
    j["timing_ms"] = r.timing_ms;
    return j;
}

inline AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.generators = j.at("generators").get<std::vector<long long>>();
    r.frobenius = j.at("frobenius").get<long long>();
    r.multiplicity = j.at("multiplicity").get<long long>();
    r.symmetric = j.at("symmetric").get<bool>();
    r.apery = j.at("apery").get<std::vector<long long>>();
    r.defining_ideal = j.at("defining_ideal").get<std::vector<std::string>>();
    r.classification = j.at("classification");
    r.standard_basis = j.at("standard_basis").get<std::vector<std::string>>();
    const json& tc = j.at("tangent_cone");
    r.tangent.mu_i = tc.at("mu_i").get<int>();
    r.tangent.mu_istar = tc.at("mu_istar").get<int>();
    r.tangent.cohen_macaulay = tc.at("cohen_macaulay").get<bool>();
    r.tangent.h0_length = tc.at("h0_length").get<long long>();
    r.tangent.buchsbaum_level = tc.at("buchsbaum_level").get<int>();
    if (!tc.at("gorenstein").is_null()) r.tangent.gorenstein = tc.at("gorenstein").get<bool>();
    r.tangent.istar_generators = tc.at("initial_forms").get<std::vector<std::string>>();
    r.tangent.h0_basis = tc.at("h0_basis").get<std::vector<std::string>>();
    r.tangent.h0_monomial_spanning = tc.at("h0_monomial_spanning").get<bool>();
    r.tangent.hilbert = tc.at("hilbert").get<std::vector<long long>>();
    if (!j.at("goto").is_null()) r.goto_report = goto_from_json(j.at("goto"));
    r.checks = j.at("checks");
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
}

inline std::string to_text(const AnalysisReport& r) {
    std::string s;
    auto line = [&](const std::string& t) { s += t + "\n"; };
    std::string gens;
    for (auto g : r.generators) gens += (gens.empty() ? "" : ", ") + std::to_string(g);
    line("semigroup <" + gens + ">");
    line("  frobenius        " + std::to_string(r.frobenius));
    line(std::string("  symmetric        ") + (r.symmetric ? "yes" : "no"));
    std::string ap;
    for (auto w : r.apery) ap += (ap.empty() ? "" : ", ") + std::to_string(w);
    line("  apery(" + std::to_string(r.multiplicity) + ")        {" + ap + "}");
    line("defining ideal (mu = " + std::to_string(r.tangent.mu_i) + ")");
    for (const auto& b : r.defining_ideal) line("  " + b);
    line("classification     " + r.classification.value("kind", std::string("none")));
    line("standard basis");
    for (const auto& b : r.standard_basis) line("  " + b);
    line("initial forms (mu = " + std::to_string(r.tangent.mu_istar) + ")");
    for (const auto& b : r.tangent.istar_generators) line("  " + b);
    line(std::string("tangent cone       ") +
         (r.tangent.cohen_macaulay ? "Cohen-Macaulay" : "not Cohen-Macaulay"));
    line("  h0 length        " + std::to_string(r.tangent.h0_length));
    line("  buchsbaum level  " + std::to_string(r.tangent.buchsbaum_level));
    if (!r.tangent.h0_basis.empty()) {
        std::string bs;
        for (const auto& m : r.tangent.h0_basis) bs += (bs.empty() ? "" : ", ") + m;
        line("  h0 basis         {" + bs + "}");
    }
    line("  gorenstein       " +
         std::string(!r.tangent.gorenstein ? "n/a" : (*r.tangent.gorenstein ? "yes" : "no")));
    std::string hf;
    for (auto v : r.tangent.hilbert) hf += (hf.empty() ? "" : " ") + std::to_string(v);
    line("  hilbert          " + hf);
    if (r.goto_report) {
        const GotoReport& g = *r.goto_report;
        line("invariants");
        line("  s_q              " + std::to_string(g.s_q));
        line("  r_q              " + std::to_string(g.r_q));
        line("  ord_m(C)         " + std::to_string(g.conductor_ord));
        line("  ord(f+n1)        " + std::to_string(g.ord_special));
        std::string gt;
        for (const auto& [k, v] : g.goto_of_generators)
            gt += (gt.empty() ? "" : ", ") + std::string("g(t^") + std::to_string(k) +
                  ")=" + std::to_string(v);
        line("  goto numbers     " + gt + ", g(t^" +
             std::to_string(r.frobenius + r.multiplicity + 1) + ")=" +
             std::to_string(g.goto_special));
        line(std::string("  (ddag) equality  ") + (g.ddag_equality ? "yes" : "no"));
        line(std::string("  chain equal      ") + (g.chain_all_equal ? "yes" : "no"));
    }
    return s;
}

} // namespace tcone
