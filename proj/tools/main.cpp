// Command-line front end: classify | spectrum | undress | verify | simulate.
// Reads a potential in the JSON wire format, writes JSON (or an ASCII
// timeline) to stdout. Exit codes: 0 success / verified, 1 verification
// failed (a domain result, not an error), 2 usage or input error.

#include "tropolax/bbs.hpp"
#include "tropolax/constraints.hpp"
#include "tropolax/json_io.hpp"
#include "tropolax/lax.hpp"
#include "tropolax/undress.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace tropolax;

void warn_range(const Potential& u) {
    for (int i : u.unit_range_violations())
        std::cerr << "warning: u_" << i << " = " << rational_str(u.at(i))
                  << " lies outside [0, 1); formulas are applied literally\n";
}

Soliton select_soliton(const Potential& u, int index) {
    std::vector<Soliton> sols = detect_solitons(u);
    if (index < 0 || index >= static_cast<int>(sols.size()))
        throw std::invalid_argument("soliton index " + std::to_string(index) +
                                    " out of range; potential has " +
                                    std::to_string(sols.size()) + " soliton(s)");
    return sols[static_cast<std::size_t>(index)];
}

json classify_report(const Potential& u) {
    CaseTag tag = classify_case(u);
    json sols = json::array();
    for (const Soliton& s : detect_solitons(u)) sols.push_back(soliton_to_json(s));
    return json{{"case", case_name(tag.kind)},
                {"v_sup", rational_str(tag.v_sup)},
                {"k", rational_str(compute_k(u))},
                {"solitons", std::move(sols)}};
}

json spectrum_report(const Potential& u, const std::string& which) {
    Rational k = compute_k(u);
    MaxPlusMatrix a =
        which == "gamma" ? build_gamma_matrix(u, k) : build_delta_matrix(u, k);
    CriticalGraph crit = critical_graph(a);

    json eigvecs = json::array();
    for (const Soliton& s : detect_solitons(u)) {
        FundamentalPair pair = fundamental_pair(u, s);
        json entry{{"soliton", soliton_to_json(s)},
                   {"eigenvector",
                    eigenseq_to_json(which == "gamma" ? pair.phi1 : pair.phi2)}};
        eigvecs.push_back(std::move(entry));
    }
    return json{{"matrix", which},
                {"k", rational_str(k)},
                {"window_lo", a.lo()},
                {"window_hi", a.hi()},
                {"critical", critical_graph_to_json(crit)},
                {"eigenvectors", std::move(eigvecs)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"max-plus spectral toolkit for the ultradiscrete KdV Lax system"};
    app.require_subcommand(1);

    std::string input;
    std::string matrix_sel = "gamma";
    std::string format = "json";
    std::string mu_override;
    int soliton_index = 0;
    int steps = 1;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "potential JSON file")->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "case, k and soliton list");
    add_input(classify);

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "critical graph and fundamental eigenvectors");
    add_input(spectrum);
    spectrum->add_option("--matrix", matrix_sel, "gamma or delta")
        ->check(CLI::IsMember({"gamma", "delta"}));

    CLI::App* undress =
        app.add_subcommand("undress", "remove one soliton from the potential");
    add_input(undress);
    undress->add_option("--soliton", soliton_index, "index into the detected list");

    CLI::App* verify =
        app.add_subcommand("verify", "check the full four-equation system");
    add_input(verify);
    verify->add_option("--soliton", soliton_index, "index into the detected list");
    verify->add_option("--mu", mu_override, "override mu (rational string)");

    CLI::App* simulate = app.add_subcommand("simulate", "evolve the automaton");
    add_input(simulate);
    simulate->add_option("--steps", steps, "number of time steps")
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--format", format, "ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
    }

    try {
        Potential u = load_potential(input);
        warn_range(u);

        if (classify->parsed()) {
            std::cout << dump_json(classify_report(u));
        } else if (spectrum->parsed()) {
            std::cout << dump_json(spectrum_report(u, matrix_sel));
        } else if (undress->parsed()) {
            Soliton sol = select_soliton(u, soliton_index);
            std::cout << dump_json(potential_to_json(undress_closed_form(u, sol)));
        } else if (verify->parsed()) {
            Soliton sol = select_soliton(u, soliton_index);
            FundamentalPair pair = fundamental_pair(u, sol);
            Rational k = compute_k(u);
            Rational mu = mu_override.empty() ? compute_mu(u, sol)
                                              : parse_rational(mu_override);
            if (mu < 0) throw std::invalid_argument("mu must be nonnegative");
            ConstraintReport report =
                full_system_check(u, pair.phi1, pair.phi2, k, mu);
            std::cout << dump_json(report_to_json(report));
            return report.all_ok() ? 0 : 1;
        } else if (simulate->parsed()) {
            std::vector<Potential> states = evolve(u, steps);
            if (format == "ascii") {
                std::cout << render_timeline(states);
            } else {
                json rows = json::array();
                for (const Potential& s : states) rows.push_back(potential_to_json(s));
                std::cout << dump_json(json{{"states", std::move(rows)}});
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
