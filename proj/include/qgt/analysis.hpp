#pragma once

// End-to-end analysis of a single scenario: induce the classical game from
// the quantum one, enumerate equilibria, run the selection algorithm, and --
// for epsilon-family scenarios on Battle of the Sexes -- attach the validity
// report, the sign-rule prediction and the baseline comparison. Every report
// re-checks the closed-form payoffs against the density-matrix route and
// records the worst deviation.

#include <optional>
#include <string>

#include "qgt/bos.hpp"
#include "qgt/game.hpp"
#include "qgt/quantum.hpp"
#include "qgt/scenario.hpp"

namespace qgt {

struct AnalysisReport {
    Scenario scenario;
    Bimatrix2x2 game;
    InitialState state;
    Bimatrix2x2 derived;
    EquilibriumSet eqset;

    std::optional<RiskDominanceCertificate> certificate;
    std::string certificate_note;

    // Present only for Battle-of-the-Sexes scenarios in epsilon coordinates.
    std::optional<EpsilonPair> eps;
    std::optional<LemmaReport> lemma;
    std::optional<TheoremPrediction> theorem;
    std::optional<bool> prediction_consistent;
    std::optional<BaselineComparison> baselines;

    double oracle_deviation = 0.0;  // worst |closed form - trace route| observed
};

/// Worst componentwise gap between the two payoff routes for this state and
/// game, probed at the four pure profiles and two interior mixtures.
inline double oracle_cross_check(const InitialState& state, const Bimatrix2x2& game) {
    const PayoffOperatorPair ops = payoff_operators(game);
    const DensityMatrix rho = density_of(state);
    double worst = 0.0;
    const MixedStrategyPair probes[] = {{1.0, 1.0}, {1.0, 0.0}, {0.0, 1.0},
                                        {0.0, 0.0}, {0.5, 0.5}, {0.3, 0.7}};
    for (const auto& s : probes) {
        const PayoffPair direct = mixed_payoff(state, game, s);
        const PayoffPair traced = trace_payoffs(evolve(rho, s), ops);
        worst = std::max({worst, std::abs(direct.a - traced.a), std::abs(direct.b - traced.b)});
    }
    return worst;
}

inline AnalysisReport analyze(const Scenario& sc) {
    if (sc.has_sweep())
        throw scenario_error("analysis needs a single state; this scenario has a sweep spec");

    const Bimatrix2x2 game = sc.game();
    const InitialState state = sc.state();
    const Bimatrix2x2 derived = derived_bimatrix(state, game);

    AnalysisReport rep{sc, game, state, derived, equilibria(derived), {}, {}, {}, {}, {}, {}, {}, 0.0};

    if (has_strong_diagonal_equilibria(derived)) {
        rep.certificate = harsanyi_selten_select(derived);
    } else {
        rep.certificate_note =
            "selection not applicable: the induced game lacks strong equilibria at (1,1) and (0,0)";
    }

    if (sc.is_bos()) {
        rep.eps = sc.state_epsilons();
        if (rep.eps) {
            rep.lemma = lemma_check(*sc.bos, *rep.eps);
            if (rep.lemma->valid) {
                rep.theorem = theorem_prediction(*sc.bos, *rep.eps);
                rep.prediction_consistent = prediction_consistency(*sc.bos, *rep.eps);
                rep.baselines = baseline_comparison(*sc.bos, *rep.eps);
            }
        }
    }

    rep.oracle_deviation = oracle_cross_check(state, game);
    return rep;
}

} // namespace qgt
