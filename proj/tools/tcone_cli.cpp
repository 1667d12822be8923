// Command-line front end: per-semigroup analysis reports, raw basis dumps,
// structure classification, Goto-number reports, and batch conjecture
// exploration.
//
// Exit codes: 0 ok, 2 validation error, 3 internal assertion (a theorem
// violation is always either a bug or a discovery; the offending input is
// printed in full).

#include <CLI11.hpp>
#include <iostream>

#include "tcone/tcone.hpp"

namespace {

int guarded(const std::vector<long long>& gens, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const tcone::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.is_validation()) {
            std::cerr << "input:";
            for (auto g : gens) std::cerr << " " << g;
            std::cerr << "\n";
            return 3;
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup tangent cone analyzer"};
    app.require_subcommand(1);

    std::vector<long long> gens;
    bool as_json = false;
    std::vector<int> order_perm;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("generators", gens, "semigroup generators")->required()->expected(-1);
        cmd->add_flag("--json", as_json, "emit JSON");
        cmd->add_option("--order", order_perm,
                        "variable permutation for the negdegrevlex order (1-based)")
            ->delimiter(',');
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full analysis report");
    add_common(analyze);

    CLI::App* basis = app.add_subcommand("basis", "minimal standard basis and initial forms");
    add_common(basis);

    CLI::App* classify = app.add_subcommand("classify", "Herzog / Bresinsky structure");
    add_common(classify);

    CLI::App* gotoc = app.add_subcommand("goto", "Goto numbers and the equality chain");
    add_common(gotoc);

    CLI::App* search = app.add_subcommand("search", "batch conjecture exploration");
    tcone::SearchOptions sopt;
    std::string check_name = "mu13";
    bool search_json = false, search_csv = false;
    search->add_option("--dim", sopt.dim, "embedding dimension (2..5)")->required();
    search->add_option("--max-gen", sopt.max_gen, "largest generator")->required();
    search->add_option("--check", check_name, "mu13|gorenstein-chain|dagger|buchsbaum");
    search->add_option("--workers", sopt.workers, "worker thread count");
    search->add_flag("--symmetric-only", sopt.symmetric_only, "restrict to symmetric semigroups");
    search->add_flag("--bresinsky-d5-filter", sopt.bresinsky_d5,
                     "require n_i + n_j = n_k + n_l among the five generators");
    search->add_flag("--json", search_json, "emit JSON summary");
    search->add_flag("--csv", search_csv, "emit per-instance CSV rows");

    CLI11_PARSE(app, argc, argv);

    tcone::AnalysisOptions aopt;
    if (!order_perm.empty()) aopt.order_perm = order_perm;

    if (analyze->parsed()) {
        return guarded(gens, [&] {
            tcone::AnalysisReport rep = tcone::analyze(gens, aopt);
            if (as_json) std::cout << tcone::to_json(rep).dump(2) << "\n";
            else std::cout << tcone::to_text(rep);
        });
    }
    if (basis->parsed()) {
        return guarded(gens, [&] {
            auto G = tcone::NumericalSemigroup::create(gens);
            std::optional<tcone::MonomialOrder> ord;
            if (!order_perm.empty()) {
                std::vector<int> p;
                for (int v : order_perm) p.push_back(v - 1);
                ord = tcone::MonomialOrder::negdegrevlex(p);
            }
            auto I = tcone::defining_ideal(G, ord);
            auto sb = tcone::standard_basis(I.generators, I.order, G.weights());
            auto ifi = tcone::initial_form_ideal(sb);
            if (as_json) {
                tcone::json j;
                j["schema_version"] = 1;
                j["generators"] = G.generators();
                tcone::json b = tcone::json::array(), f = tcone::json::array();
                for (const auto& e : sb.elements) b.push_back(tcone::to_string(e.to_element()));
                for (const auto& g : ifi.generators) f.push_back(tcone::to_string(g));
                j["standard_basis"] = b;
                j["initial_forms"] = f;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "minimal standard basis:\n";
                for (const auto& e : sb.elements)
                    std::cout << "  " << tcone::to_string(e.to_element()) << "\n";
                std::cout << "initial form ideal:\n";
                for (const auto& g : ifi.generators)
                    std::cout << "  " << tcone::to_string(g) << "\n";
            }
        });
    }
    if (classify->parsed()) {
        return guarded(gens, [&] {
            tcone::AnalysisOptions copt = aopt;
            copt.with_h0 = false;
            copt.with_goto = false;
            copt.run_checks = false;
            tcone::AnalysisReport rep = tcone::analyze(gens, copt);
            if (as_json) std::cout << rep.classification.dump(2) << "\n";
            else
                std::cout << rep.classification.value("kind", std::string("none")) << "\n"
                          << rep.classification.dump(2) << "\n";
        });
    }
    if (gotoc->parsed()) {
        return guarded(gens, [&] {
            auto G = tcone::NumericalSemigroup::create(gens);
            tcone::GotoReport rep = tcone::equality_chain_report(G);
            if (as_json) std::cout << tcone::to_json(rep).dump(2) << "\n";
            else {
                std::cout << "s_q=" << rep.s_q << " r_q=" << rep.r_q
                          << " ord_C=" << rep.conductor_ord << " ord(f+n1)=" << rep.ord_special
                          << "\n";
                for (const auto& [g, v] : rep.goto_of_generators)
                    std::cout << "g(t^" << g << ") = " << v << "\n";
                std::cout << "g(t^" << G.frobenius() + G.multiplicity() + 1
                          << ") = " << rep.goto_special << "\n";
                std::cout << "(ddag) equality: " << (rep.ddag_equality ? "yes" : "no")
                          << ", chain equal: " << (rep.chain_all_equal ? "yes" : "no") << "\n";
            }
        });
    }
    if (search->parsed()) {
        auto check = tcone::parse_check(check_name);
        if (!check) {
            std::cerr << "error: unknown check '" << check_name << "'\n";
            return 2;
        }
        sopt.check = *check;
        return guarded({}, [&] {
            tcone::SearchSummary sum = tcone::run_search(sopt, search_csv);
            if (search_json) std::cout << tcone::to_json(sum).dump(2) << "\n";
            else if (search_csv) std::cout << tcone::to_csv(sum);
            else std::cout << tcone::to_text(sum);
            if (!sum.violations.empty())
                tcone::fail(tcone::errc::theorem_violation,
                            std::to_string(sum.violations.size()) +
                                " violation(s) found; see the report above");
        });
    }
    return 0;
}
