#pragma once

// Rendering of analysis results: human-readable text, machine-readable JSON,
// and the sweep CSV. All formatting is deterministic; identical inputs yield
// byte-identical output.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgt/analysis.hpp"
#include "qgt/bos.hpp"
#include "qgt/verify.hpp"

namespace qgt {

/// printf-style double formatting into a std::string.
inline std::string fmt(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string fmt17(double v) { return fmt(v, "%.17g"); }

inline std::string fmt_pair(const PayoffPair& p, const char* spec = "%.12g") {
    return "(" + fmt(p.a, spec) + ", " + fmt(p.b, spec) + ")";
}

inline std::string bimatrix_lines(const Bimatrix2x2& g, const std::string& indent) {
    std::string out;
    out += indent + fmt_pair(g.at(1, 1)) + "  " + fmt_pair(g.at(1, 0)) + "\n";
    out += indent + fmt_pair(g.at(0, 1)) + "  " + fmt_pair(g.at(0, 0)) + "\n";
    return out;
}

inline std::string render_text(const AnalysisReport& rep) {
    std::string out;
    out += "classical game (rows/columns: strategy 1 first):\n";
    out += bimatrix_lines(rep.game, "  ");
    out += "induced game:\n";
    out += bimatrix_lines(rep.derived, "  ");

    out += "equilibria:\n";
    for (const auto& e : rep.eqset.pure) {
        out += "  pure (" + std::to_string(e.profile.i) + "," + std::to_string(e.profile.j) + ")";
        out += e.strong ? "  strong" : "  weak  ";
        out += "  payoffs " + fmt_pair(e.payoffs) + "\n";
    }
    if (rep.eqset.mixed)
        out += "  mixed (" + fmt(rep.eqset.mixed->s1) + ", " + fmt(rep.eqset.mixed->s2) +
               ")  payoffs " + fmt_pair(*rep.eqset.mixed_payoffs) + "\n";
    if (rep.eqset.pure.empty() && !rep.eqset.mixed) out += "  none in pure strategies\n";

    out += "selection:\n";
    if (rep.certificate) {
        const auto& c = *rep.certificate;
        out += "  u1=" + fmt(c.u1) + "  v1=" + fmt(c.v1) + "  u2=" + fmt(c.u2) +
               "  v2=" + fmt(c.v2) + "\n";
        out += "  u1*u2=" + fmt(c.product_u) + "  v1*v2=" + fmt(c.product_v) + "\n";
        out += "  selected " + selection_label(c.selection);
        if (const auto* m = std::get_if<MixedEquilibrium>(&c.selection))
            out += " (" + fmt(m->s1) + ", " + fmt(m->s2) + ")";
        out += " by " + to_string(c.selected_by);
        out += ", payoffs " + fmt_pair(c.selection_payoffs) + "\n";
        if (c.payoff_tie_noted)
            out += "  note: distinct equilibria share identical payoffs; payoff dominance abstains\n";
    } else {
        out += "  " + rep.certificate_note + "\n";
    }

    if (rep.lemma) {
        const auto& l = *rep.lemma;
        out += "state family check (eps1=" + fmt(rep.eps->eps1) + ", eps2=" + fmt(rep.eps->eps2) +
               "):\n";
        out += std::string("  valid: ") + (l.valid ? "yes" : "no");
        out += std::string("  (condition: ") +
               (l.branch == LemmaBranch::equal_below_quarter ? "equal epsilons below 1/4"
                                                             : "eps1+eps2 <= 1-2*max") +
               ")";
        if (!l.valid) out += "  reason: " + l.reason;
        out += "\n";
        out += "  deviation margins: at (1,1) " + fmt(l.margin_11) + ", at (0,0) " +
               fmt(l.margin_00) + "\n";
        out += std::string("  equilibria preserved: ") + (l.equilibria_preserved ? "yes" : "no") +
               std::string("; payoffs symmetric: ") + (l.payoffs_symmetric ? "yes" : "no") + "\n";
    }

    if (rep.theorem) {
        const auto& t = *rep.theorem;
        out += "sign rule:\n";
        out += "  predicted " + to_string(t.predicted) + ", sign product " + fmt(t.sign_product) +
               "\n";
        out += "  payoff at prediction " + fmt(t.payoff_value) + "\n";
        if (t.tie_reference_value) {
            out += "  tie-branch reference value " + fmt(*t.tie_reference_value) +
                   (t.tie_value_discrepancy ? "  (differs from bilinear evaluation)"
                                            : "  (matches bilinear evaluation)") +
                   "\n";
        }
        out += std::string("  prediction matches selection: ") +
               (*rep.prediction_consistent ? "yes" : "no") + "\n";
    }

    if (rep.baselines) {
        const auto& b = *rep.baselines;
        out += "baselines:\n";
        out += "  classical random play        " + fmt(b.classical_random) + "\n";
        out += "  entangled random play        " + fmt(b.mw_entangled_random) + "\n";
        out += "  NT selected equilibrium      " + fmt(b.nt_equilibrium) + "\n";
        out += "  epsilon selected equilibrium " + fmt(b.eps_equilibrium) + "\n";
        out += std::string("  ordering eps > NT > random: ") +
               (b.eps_above_nt && b.nt_above_random ? "yes" : "no") + "\n";
    }

    out += "oracle check: max deviation " + fmt(rep.oracle_deviation, "%.3g") +
           " (tolerance " + fmt(kOracleTol, "%.0e") + ")\n";
    return out;
}

inline nlohmann::json payoffs_json(const PayoffPair& p) {
    return nlohmann::json{p.a, p.b};
}

inline nlohmann::json bimatrix_json(const Bimatrix2x2& g) {
    return nlohmann::json{
        {payoffs_json(g.at(1, 1)), payoffs_json(g.at(1, 0))},
        {payoffs_json(g.at(0, 1)), payoffs_json(g.at(0, 0))},
    };
}

inline nlohmann::json render_json(const AnalysisReport& rep) {
    nlohmann::json doc;
    doc["scenario"] = scenario_to_json(rep.scenario);
    doc["game"] = bimatrix_json(rep.game);
    doc["induced_game"] = bimatrix_json(rep.derived);

    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : rep.eqset.pure)
        eqs.push_back({{"kind", "pure"},
                       {"profile", {e.profile.i, e.profile.j}},
                       {"strong", e.strong},
                       {"payoffs", payoffs_json(e.payoffs)}});
    if (rep.eqset.mixed)
        eqs.push_back({{"kind", "mixed"},
                       {"weights", {rep.eqset.mixed->s1, rep.eqset.mixed->s2}},
                       {"payoffs", payoffs_json(*rep.eqset.mixed_payoffs)}});
    doc["equilibria"] = eqs;

    if (rep.certificate) {
        const auto& c = *rep.certificate;
        nlohmann::json cert{{"u1", c.u1},
                            {"v1", c.v1},
                            {"u2", c.u2},
                            {"v2", c.v2},
                            {"product_u", c.product_u},
                            {"product_v", c.product_v},
                            {"selection", selection_label(c.selection)},
                            {"selected_by", to_string(c.selected_by)},
                            {"payoffs", payoffs_json(c.selection_payoffs)},
                            {"payoff_tie_noted", c.payoff_tie_noted}};
        if (const auto* m = std::get_if<MixedEquilibrium>(&c.selection))
            cert["mixed_weights"] = {m->s1, m->s2};
        doc["risk_dominance"] = cert;
    } else {
        doc["risk_dominance"] = nullptr;
        doc["risk_dominance_note"] = rep.certificate_note;
    }

    if (rep.lemma) {
        const auto& l = *rep.lemma;
        doc["state_family"] = {
            {"eps1", rep.eps->eps1},
            {"eps2", rep.eps->eps2},
            {"valid", l.valid},
            {"condition", l.branch == LemmaBranch::equal_below_quarter ? "equal-below-quarter"
                                                                       : "unequal-sum-bound"},
            {"margin_11", l.margin_11},
            {"margin_00", l.margin_00},
            {"equilibria_preserved", l.equilibria_preserved},
            {"payoffs_symmetric", l.payoffs_symmetric},
            {"reason", l.reason},
        };
    }

    if (rep.theorem) {
        const auto& t = *rep.theorem;
        nlohmann::json th{{"predicted", to_string(t.predicted)},
                          {"sign_product", t.sign_product},
                          {"payoff_value", t.payoff_value},
                          {"consistent_with_selection", *rep.prediction_consistent}};
        if (t.tie_reference_value) {
            th["tie_reference_value"] = *t.tie_reference_value;
            th["tie_value_discrepancy"] = t.tie_value_discrepancy;
        }
        doc["sign_rule"] = th;
    }

    if (rep.baselines) {
        const auto& b = *rep.baselines;
        doc["baselines"] = {{"classical_random", b.classical_random},
                            {"mw_entangled_random", b.mw_entangled_random},
                            {"nt_equilibrium", b.nt_equilibrium},
                            {"eps_equilibrium", b.eps_equilibrium},
                            {"eps_above_nt", b.eps_above_nt},
                            {"nt_above_random", b.nt_above_random}};
    }

    doc["oracle_deviation"] = rep.oracle_deviation;
    return doc;
}

inline std::string render_compare_text(const BaselineComparison& b) {
    std::string out;
    out += "classical random play        " + fmt(b.classical_random) + "\n";
    out += "entangled random play        " + fmt(b.mw_entangled_random) + "\n";
    out += "NT selected equilibrium      " + fmt(b.nt_equilibrium) + "\n";
    out += "epsilon selected equilibrium " + fmt(b.eps_equilibrium) + "\n";
    out += std::string("ordering eps > NT > random: ") +
           (b.eps_above_nt && b.nt_above_random ? "yes" : "no") + "\n";
    return out;
}

inline nlohmann::json render_compare_json(const BaselineComparison& b) {
    return nlohmann::json{{"classical_random", b.classical_random},
                          {"mw_entangled_random", b.mw_entangled_random},
                          {"nt_equilibrium", b.nt_equilibrium},
                          {"eps_equilibrium", b.eps_equilibrium},
                          {"eps_above_nt", b.eps_above_nt},
                          {"nt_above_random", b.nt_above_random}};
}

/// One CSV field; values containing commas are double-quoted.
inline std::string csv_field(const std::string& value) {
    if (value.find(',') == std::string::npos) return value;
    return "\"" + value + "\"";
}

/// Header plus one row per record: eps1, eps2, lemma_valid, selection,
/// payoff_a, payoff_b, sign_product. Numbers carry 17 significant digits so
/// the text round-trips to the same doubles.
inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "eps1,eps2,lemma_valid,selection,payoff_a,payoff_b,sign_product\n";
    for (const auto& r : records) {
        os << fmt17(r.eps1) << ',' << fmt17(r.eps2) << ',' << (r.lemma_valid ? 1 : 0) << ','
           << csv_field(r.selected) << ',' << fmt17(r.payoff_a) << ',' << fmt17(r.payoff_b) << ','
           << fmt17(r.sign_product) << '\n';
    }
}

inline std::string render_verify_text(const std::vector<PropertyResult>& results) {
    std::string out;
    bool all = true;
    for (const auto& r : results) {
        all &= r.passed;
        out += r.passed ? "[PASS] " : "[FAIL] ";
        out += r.name;
        for (std::size_t pad = r.name.size(); pad < 26; ++pad) out += ' ';
        out += " samples=" + std::to_string(r.samples);
        out += " max_deviation=" + fmt(r.max_deviation, "%.3e");
        out += " tolerance=" + fmt(r.tolerance, "%.0e");
        out += "\n";
    }
    out += all ? "all properties passed\n" : "property failures detected\n";
    return out;
}

} // namespace qgt
