#include "jacring/cli.hpp"

#include "jacring/acceptance.hpp"
#include "jacring/errors.hpp"
#include "jacring/fourier.hpp"
#include "jacring/graph.hpp"
#include "jacring/obstruct.hpp"
#include "jacring/tautalg.hpp"
#include "jacring/witten.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

namespace jacring {
namespace cli {

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::json;

json wrap(const std::string& command, json inputs, json result) {
    json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    j["version"] = kVersion;
    return j;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty())
            out.push_back(std::stoi(tok));
    return out;
}

// "T^a K^b" (or "T^a*K^b"); T = Theta, K = kappa_{0,1}
bool parse_monomial(const std::string& s, int* theta, int* kappa) {
    *theta = 0;
    *kappa = 0;
    std::string cur;
    auto flush = [&]() -> bool {
        if (cur.empty())
            return true;
        char sym = cur[0];
        int exp = 1;
        if (cur.size() > 1) {
            if (cur[1] != '^')
                return false;
            try {
                exp = std::stoi(cur.substr(2));
            } catch (...) {
                return false;
            }
        }
        if (exp < 0)
            return false;
        if (sym == 'T')
            *theta += exp;
        else if (sym == 'K')
            *kappa += exp;
        else if (sym == '1' && cur.size() == 1)
            ;  // the empty monomial
        else
            return false;
        cur.clear();
        return true;
    };
    for (char c : s) {
        if (c == ' ' || c == '*') {
            if (!flush())
                return false;
        } else {
            cur += c;
        }
    }
    return flush();
}

json base_expr_json(const BaseExpr& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms())
        terms.push_back({{"coeff", to_string(c)}, {"class", to_string(m)}});
    return json{{"terms", terms}};
}

int cmd_stability(int g, long long z, bool as_json, std::ostream& out) {
    StabilityFamily fam{g, z};
    json rows = json::array();
    std::ostringstream text;
    text << "g1  phi_v  delta  stable_multidegrees\n";
    for (int g1 = 1; g1 <= g - 1; ++g1) {
        EpsRational phi = fam.phi_two_edge_v(g1);
        Integer delta = delta_g1(fam, g1);
        PrestableGraph vine = make_vine(g, g1, 2);
        auto [v, w] = vine_vertex_ids(vine);
        json degs = json::array();
        std::ostringstream degs_text;
        for (const Multidegree& m : stable_multidegrees(fam, vine, 0)) {
            degs.push_back({m.values.at(v), m.values.at(w)});
            degs_text << "(" << m.values.at(v) << "," << m.values.at(w) << ") ";
        }
        rows.push_back({{"g1", g1},
                        {"phi_v", phi.str()},
                        {"delta", delta.str()},
                        {"stable_multidegrees", degs}});
        text << g1 << "  " << phi.str() << "  " << delta.str() << "  " << degs_text.str()
             << "\n";
    }
    if (as_json)
        out << wrap("stability", {{"g", g}, {"z", z}}, {{"table", rows}}).dump() << "\n";
    else
        out << text.str();
    return 0;
}

int cmd_push(int g, long long z, const std::string& monomial, bool trace, bool as_json,
             std::ostream& out, std::ostream& err) {
    int theta = 0, kappa = 0;
    if (!parse_monomial(monomial, &theta, &kappa)) {
        err << "cannot parse monomial '" << monomial << "'; expected e.g. \"T^3 K^2\"\n";
        return 1;
    }
    PushContext ctx{g, StabilityFamily{g, z}};
    TautExpr e;
    DecoratedTerm t;
    if (theta)
        t.monomial[theta_div()] = theta;
    if (kappa)
        t.monomial[kappa01_div()] = kappa;
    e.add(t);
    JustificationLog log;
    BaseExpr result;
    try {
        result = pushforward(e, ctx, &log);
    } catch (const NoRule& ex) {
        err << ex.what() << "\n";
        return 1;
    }
    if (as_json || trace) {
        json j = wrap("push", {{"g", g}, {"z", z}, {"monomial", monomial}},
                      base_expr_json(result));
        if (trace) {
            json steps = json::array();
            for (const auto& entry : log)
                steps.push_back(entry.str());
            j["trace"] = steps;
        }
        out << j.dump() << "\n";
    } else {
        out << result.str() << "\n";
    }
    return 0;
}

int cmd_witten(int g, const std::string& taus, int kappa, bool has_kappa, bool as_json,
               std::ostream& out, std::ostream& err) {
    std::vector<int> exps = parse_int_list(taus);
    if (exps.empty()) {
        err << "--taus expects a comma separated list\n";
        return 1;
    }
    Rational value;
    try {
        if (has_kappa)
            value = psi_kappa_integral(g, static_cast<int>(exps.size()), exps, kappa);
        else
            value = witten_correlator({g, exps});
    } catch (const std::exception& ex) {
        err << ex.what() << "\n";
        return 1;
    }
    if (as_json) {
        json inputs{{"g", g}, {"taus", taus}};
        if (has_kappa)
            inputs["kappa"] = kappa;
        out << wrap("witten", inputs, {{"value", to_string(value)}}).dump() << "\n";
    } else {
        out << to_string(value) << "\n";
    }
    return 0;
}

int cmd_pairing(int g, bool divide_by_aut, bool as_json, std::ostream& out) {
    json matrix = json::array();
    json diagonal = json::array();
    std::ostringstream text;
    for (int i = 1; i <= g - 1; ++i) {
        json row = json::array();
        for (int j = 1; j <= g - 1; ++j) {
            Rational v = vine_pairing(g, i, j, divide_by_aut);
            row.push_back(to_string(v));
            text << to_string(v) << (j < g - 1 ? " " : "\n");
        }
        matrix.push_back(row);
        diagonal.push_back(to_string(vine_pairing(g, i, i, divide_by_aut)));
    }
    int rank = pairing_matrix_rank(g, divide_by_aut);
    if (as_json)
        out << wrap("pairing", {{"g", g}, {"divide_by_aut", divide_by_aut}},
                    {{"matrix", matrix}, {"diagonal", diagonal}, {"rank", rank}})
                   .dump()
            << "\n";
    else
        out << text.str() << "rank " << rank << "\n";
    return 0;
}

int cmd_fourier(int g, const std::string& axioms, const std::string& goal, bool trace,
                std::ostream& out, std::ostream& err) {
    fourier::AxiomSet ax;
    ax.g = g;
    if (axioms == "full")
        ax.kind = fourier::AxiomSet::Kind::Full;
    else if (axioms == "half")
        ax.kind = fourier::AxiomSet::Kind::Half;
    else if (axioms == "none")
        ax.kind = fourier::AxiomSet::Kind::None;
    else {
        err << "--axioms expects full|half|none\n";
        return 1;
    }
    json report = json::array();
    for (const auto& res : fourier::catalog_run(ax)) {
        if (!goal.empty() && res.name != goal)
            continue;
        json item{{"goal", res.name},
                  {"verdict", res.verdict},
                  {"steps", res.trace_steps},
                  {"note", res.note}};
        if (trace) {
            fourier::CorrExpr lhs, rhs;
            if (fourier::goal_sample(res.name, ax, &lhs, &rhs)) {
                fourier::Verdict v = fourier::verify_identity(lhs, rhs, ax, 2);
                json steps = json::array();
                for (const auto& s : v.trace)
                    steps.push_back({{"side", s.side}, {"kind", s.kind}, {"data", s.data}});
                item["sample_trace"] = steps;
                item["sample_replays"] =
                    v.verified && fourier::replay_trace(lhs, rhs, ax, v.trace);
            }
        }
        report.push_back(std::move(item));
    }
    out << wrap("fourier", {{"g", g}, {"axioms", axioms}, {"goal", goal}},
                {{"report", report}})
               .dump()
        << "\n";
    return 0;
}

int cmd_obstruction(int g, long long z, long long zp, bool as_json, std::ostream& out) {
    ObstructionReport rep = obstruction_report(g, z, zp);
    json system = json::array();
    for (const auto& c : rep.system.equations)
        system.push_back({{"g1", c.g1}, {"eq", c.str()}});
    json result;
    if (rep.result.sat) {
        IsoAnsatz an = ansatz_from_witness(g, rep.result.witness);
        result["sat"] = {{"t", to_string(rep.result.witness.t)},
                         {"b", to_string(rep.result.witness.b)},
                         {"a", to_string(an.a)},
                         {"c", to_string(an.c)},
                         {"beta_prime", to_string(an.beta_prime_dr_coeff) + "*DR1b2"}};
    } else
        result["unsat"] = {{"certificate", rep.result.certificate},
                           {"reason", rep.result.reason}};
    json profiles;
    json pz = json::array(), pzp = json::array();
    for (const auto& d : rep.profile_z)
        pz.push_back(d.str());
    for (const auto& d : rep.profile_z_prime)
        pzp.push_back(d.str());
    if (as_json) {
        out << wrap("obstruction", {{"g", g}, {"z", z}, {"zprime", zp}},
                    {{"system", system},
                     {"result", result},
                     {"delta_profile_z", pz},
                     {"delta_profile_zprime", pzp},
                     {"rings_distinguished", rep.rings_distinguished}})
                   .dump()
            << "\n";
    } else {
        for (const auto& c : rep.system.equations)
            out << "g1=" << c.g1 << ": " << c.str() << "\n";
        if (rep.result.sat)
            out << "SAT t=" << to_string(rep.result.witness.t)
                << " b=" << to_string(rep.result.witness.b) << "\n";
        else {
            out << "UNSAT certificate g1 in {";
            for (size_t i = 0; i < rep.result.certificate.size(); ++i)
                out << (i ? "," : "") << rep.result.certificate[i];
            out << "}\n";
        }
        out << (rep.rings_distinguished ? "rings distinguished" : "not distinguished") << "\n";
    }
    return 0;
}

int cmd_selftest(std::ostream& out) {
    auto results = run_acceptance();
    int pass = 0, fail = 0;
    json arr = json::array();
    for (const auto& r : results) {
        (r.pass ? pass : fail) += 1;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    out << wrap("selftest", json::object(),
                {{"criteria", arr}, {"pass_count", pass}, {"fail_count", fail}})
               .dump()
        << "\n";
    return fail == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator for tautological classes on universal compactified "
                 "Jacobians"};
    app.require_subcommand(1);

    int g = 2;
    long long z = 0, zp = 0;
    bool as_json = false, trace = false, divide_by_aut = false;
    std::string monomial, taus, axioms = "full", goal;
    int kappa = 0;

    auto* stability_cmd = app.add_subcommand("stability", "phi(z) table on the vine graphs");
    stability_cmd->add_option("--g", g)->required();
    stability_cmd->add_option("--z", z)->required();
    stability_cmd->add_flag("--json", as_json);

    auto* push_cmd = app.add_subcommand("push", "pushforward of a Theta/kappa monomial");
    push_cmd->add_option("--g", g)->required();
    push_cmd->add_option("--z", z)->required();
    push_cmd->add_option("--monomial", monomial, "e.g. \"T^3 K^2\"")->required();
    push_cmd->add_flag("--trace", trace);
    push_cmd->add_flag("--json", as_json);

    auto* witten_cmd = app.add_subcommand("witten", "psi (and single kappa) intersection number");
    witten_cmd->add_option("--g", g)->required();
    witten_cmd->add_option("--taus", taus)->required();
    auto* kappa_opt = witten_cmd->add_option("--kappa", kappa);
    witten_cmd->add_flag("--json", as_json);

    auto* pairing_cmd = app.add_subcommand("pairing", "H^4 vine pairing matrix and rank");
    pairing_cmd->add_option("--g", g)->required();
    pairing_cmd->add_flag("--divide-by-aut", divide_by_aut);
    pairing_cmd->add_flag("--json", as_json);

    auto* fourier_cmd = app.add_subcommand("fourier", "identity catalog report");
    fourier_cmd->add_option("--g", g)->required();
    fourier_cmd->add_option("--axioms", axioms, "full|half|none");
    fourier_cmd->add_option("--goal", goal);
    fourier_cmd->add_flag("--trace", trace);

    auto* obstruction_cmd =
        app.add_subcommand("obstruction", "divisor-isomorphism constraint system");
    obstruction_cmd->add_option("--g", g)->required();
    obstruction_cmd->add_option("--z", z)->required();
    obstruction_cmd->add_option("--zprime", zp)->required();
    obstruction_cmd->add_flag("--json", as_json);

    app.add_subcommand("selftest", "run the acceptance criteria");

    std::vector<std::string> args(argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (stability_cmd->parsed())
            return cmd_stability(g, z, as_json, out);
        if (push_cmd->parsed())
            return cmd_push(g, z, monomial, trace, as_json, out, err);
        if (witten_cmd->parsed())
            return cmd_witten(g, taus, kappa, kappa_opt->count() > 0, as_json, out, err);
        if (pairing_cmd->parsed())
            return cmd_pairing(g, divide_by_aut, as_json, out);
        if (fourier_cmd->parsed())
            return cmd_fourier(g, axioms, goal, trace, out, err);
        if (obstruction_cmd->parsed())
            return cmd_obstruction(g, z, zp, as_json, out);
        return cmd_selftest(out);
    } catch (const OutOfRange& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace jacring
