#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qgt/bos.hpp"
#include "qgt/verify.hpp"

using namespace qgt;

namespace {
const BosParams kParams{5, 3, 1};
}

TEST_CASE("bos_bimatrix layout and ordering check") {
    const Bimatrix2x2 g = bos_bimatrix(kParams);
    REQUIRE(g.at(1, 1) == PayoffPair{5, 3});
    REQUIRE(g.at(1, 0) == PayoffPair{1, 1});
    REQUIRE(g.at(0, 1) == PayoffPair{1, 1});
    REQUIRE(g.at(0, 0) == PayoffPair{3, 5});

    const Bimatrix2x2 h = bos_bimatrix(BosParams{3, 2, 1});
    REQUIRE(h.at(1, 1) == PayoffPair{3, 2});
    REQUIRE(h.at(0, 0) == PayoffPair{2, 3});

    REQUIRE_THROWS_AS(BosParams(3, 3, 1), ordering_violated);
    REQUIRE_THROWS_AS(BosParams(3, 2, 2), ordering_violated);
    REQUIRE_THROWS_AS(BosParams(1, 2, 3), ordering_violated);
}

TEST_CASE("epsilon_state moduli") {
    const InitialState entangled = epsilon_state(EpsilonPair{0, 0});
    REQUIRE(entangled.probability(0) == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(entangled.probability(1) == 0.0);
    REQUIRE(entangled.probability(2) == 0.0);
    REQUIRE(entangled.probability(3) == Catch::Approx(0.5).margin(1e-15));

    const InitialState s = epsilon_state(EpsilonPair{0.01, 0.02});
    REQUIRE(s.probability(0) == Catch::Approx(0.485).margin(1e-15));
    REQUIRE(s.probability(1) == Catch::Approx(0.01).margin(1e-15));
    REQUIRE(s.probability(2) == Catch::Approx(0.02).margin(1e-15));
    REQUIRE(s.probability(3) == Catch::Approx(0.485).margin(1e-15));

    REQUIRE_THROWS_AS(EpsilonPair(0.6, 0.6), invalid_epsilon);
    REQUIRE_THROWS_AS(EpsilonPair(-0.01, 0.5), invalid_epsilon);
}

TEST_CASE("lemma_check branches") {
    SECTION("unequal epsilons inside the bound") {
        const LemmaReport rep = lemma_check(kParams, EpsilonPair{0.1, 0.2});
        REQUIRE(rep.valid);
        REQUIRE(rep.branch == LemmaBranch::unequal_sum_bound);
        REQUIRE(rep.reason.empty());
    }
    SECTION("equal epsilons above a quarter fail") {
        const LemmaReport rep = lemma_check(kParams, EpsilonPair{0.3, 0.3});
        REQUIRE_FALSE(rep.valid);
        REQUIRE(rep.branch == LemmaBranch::equal_below_quarter);
        REQUIRE_FALSE(rep.reason.empty());
    }
    SECTION("equal epsilons at exactly a quarter fail, just below passes") {
        REQUIRE_FALSE(lemma_check(kParams, EpsilonPair{0.25, 0.25}).valid);
        REQUIRE(lemma_check(kParams, EpsilonPair{0.2499, 0.2499}).valid);
    }
    SECTION("the boundary of the unequal bound is accepted") {
        // eps1 + eps2 == 1 - 2*max at the Nawaz-Toor coordinates
        const LemmaReport rep = lemma_check(kParams, nt_epsilons());
        REQUIRE(rep.valid);
        REQUIRE(rep.margin_11 > 0.0);
        REQUIRE(rep.margin_00 > 0.0);
    }
    SECTION("full pipeline confirmation") {
        const LemmaReport rep = lemma_check(kParams, EpsilonPair{0.01, 0.02});
        REQUIRE(rep.valid);
        REQUIRE(rep.equilibria_preserved);
        REQUIRE(rep.payoffs_symmetric);
        REQUIRE(rep.margin_11 > 0.0);
        REQUIRE(rep.margin_00 > 0.0);
    }
    SECTION("outside the region the diagonal equilibria are gone") {
        const LemmaReport rep = lemma_check(kParams, EpsilonPair{0.3, 0.3});
        REQUIRE_FALSE(rep.equilibria_preserved);
    }
}

TEST_CASE("risk_sign_product values") {
    REQUIRE(risk_sign_product(kParams, EpsilonPair{0.01, 0.02}) ==
            Catch::Approx(-0.1128).margin(1e-10));
    REQUIRE(risk_sign_product(kParams, EpsilonPair{0.02, 0.01}) ==
            Catch::Approx(0.1128).margin(1e-10));
    REQUIRE(risk_sign_product(kParams, EpsilonPair{0.07, 0.07}) == 0.0);
    REQUIRE_THROWS_AS(risk_sign_product(kParams, EpsilonPair{0.3, 0.3}), precondition_violated);
}

TEST_CASE("risk_sign_product matches the induced game's products") {
    const PropertyResult res = check_sign_product_identity(10000, 17);
    INFO("max scaled deviation " << res.max_deviation);
    REQUIRE(res.passed);
}

TEST_CASE("theorem_prediction") {
    SECTION("asymmetric epsilons") {
        const TheoremPrediction pred = theorem_prediction(kParams, EpsilonPair{0.01, 0.02});
        REQUIRE(pred.predicted == PredictedSelection::profile_00);
        REQUIRE(pred.payoff_value == Catch::Approx(3.91).margin(1e-12));
        REQUIRE_FALSE(pred.tie_reference_value.has_value());

        const TheoremPrediction swapped = theorem_prediction(kParams, EpsilonPair{0.02, 0.01});
        REQUIRE(swapped.predicted == PredictedSelection::profile_11);
        REQUIRE(swapped.payoff_value == Catch::Approx(3.91).margin(1e-12));
    }
    SECTION("equal epsilons evaluate the mixed equilibrium bilinearly") {
        const TheoremPrediction pred = theorem_prediction(kParams, EpsilonPair{0, 0});
        REQUIRE(pred.predicted == PredictedSelection::mixed_half);
        REQUIRE(pred.payoff_value == Catch::Approx(2.5).margin(1e-12));
        REQUIRE(pred.tie_reference_value.has_value());
        REQUIRE(*pred.tie_reference_value == Catch::Approx(2.5).margin(1e-12));
        REQUIRE_FALSE(pred.tie_value_discrepancy);
    }
    SECTION("the published tie expression deviates for eps > 0") {
        const TheoremPrediction pred = theorem_prediction(kParams, EpsilonPair{0.1, 0.1});
        REQUIRE(pred.payoff_value == Catch::Approx(2.5).margin(1e-12));
        REQUIRE(*pred.tie_reference_value == Catch::Approx(2.45).margin(1e-12));
        REQUIRE(pred.tie_value_discrepancy);
    }
}

TEST_CASE("prediction agrees with the selection algorithm") {
    REQUIRE(prediction_consistency(kParams, EpsilonPair{0.01, 0.02}));
    REQUIRE(prediction_consistency(kParams, EpsilonPair{0.1, 0.1}));

    const PropertyResult res = check_prediction_consistency(10000, 23);
    INFO("disagreement fraction " << res.max_deviation);
    REQUIRE(res.passed);
}

TEST_CASE("swapping the epsilons flips the selection, not the payoff") {
    Rng rng(606);
    for (int n = 0; n < 2000; ++n) {
        const BosParams params = random_bos_params(rng);
        const EpsilonPair eps = random_valid_epsilons(rng);
        const EpsilonPair swapped{eps.eps2, eps.eps1};

        const double sp = risk_sign_product(params, eps);
        const double sp_swapped = risk_sign_product(params, swapped);
        REQUIRE(sp_swapped == Catch::Approx(-sp).margin(1e-12));

        const TheoremPrediction a = theorem_prediction(params, eps);
        const TheoremPrediction b = theorem_prediction(params, swapped);
        REQUIRE(a.payoff_value == Catch::Approx(b.payoff_value).margin(1e-10));
        if (a.predicted == PredictedSelection::profile_11)
            REQUIRE(b.predicted == PredictedSelection::profile_00);
        if (a.predicted == PredictedSelection::mixed_half)
            REQUIRE(b.predicted == PredictedSelection::mixed_half);
    }
}

TEST_CASE("both players earn the same at every equilibrium") {
    Rng rng(909);
    for (int n = 0; n < 2000; ++n) {
        const BosParams params = random_bos_params(rng);
        const EpsilonPair eps = random_valid_epsilons(rng);
        const LemmaReport rep = lemma_check(params, eps);
        REQUIRE(rep.valid);
        REQUIRE(rep.payoffs_symmetric);

        const Bimatrix2x2 induced = derived_bimatrix(epsilon_state(eps), bos_bimatrix(params));
        REQUIRE(induced.at(1, 1).a == Catch::Approx(induced.at(0, 0).a).margin(1e-12));
        REQUIRE(induced.at(1, 1).b == Catch::Approx(induced.at(0, 0).b).margin(1e-12));
    }
}

TEST_CASE("payoff decreases strictly as the epsilons grow") {
    // For unequal epsilons the selected payoff is
    // ((alpha+beta) - (alpha+beta-2*gamma)*s)/2, strictly decreasing in s.
    double prev = theorem_prediction(kParams, EpsilonPair{0.001, 0.002}).payoff_value;
    for (double scale : {2.0, 4.0, 8.0, 16.0, 32.0}) {
        const double cur =
            theorem_prediction(kParams, EpsilonPair{0.001 * scale, 0.002 * scale}).payoff_value;
        REQUIRE(cur < prev);
        prev = cur;
    }
}

TEST_CASE("supremum_gap returns a valid witness") {
    for (double delta : {0.2, 1.0}) {
        const EpsilonPair eps = supremum_gap(kParams, delta);
        REQUIRE(eps.eps1 != eps.eps2);
        REQUIRE(lemma_check(kParams, eps).valid);
        const double payoff = theorem_prediction(kParams, eps).payoff_value;
        REQUIRE(payoff >= 0.5 * (kParams.alpha + kParams.beta) - delta);
    }
    REQUIRE_THROWS_AS(supremum_gap(kParams, 0.0), invalid_delta);
    REQUIRE_THROWS_AS(supremum_gap(kParams, -0.5), invalid_delta);
    REQUIRE_THROWS_AS(supremum_gap(kParams, 3.0), invalid_delta);  // (alpha+beta)/2 - gamma
}

TEST_CASE("the supremum is never attained") {
    Rng rng(2718);
    const double sup = 0.5 * (kParams.alpha + kParams.beta);
    for (int n = 0; n < 1000; ++n) {
        const EpsilonPair eps = random_valid_epsilons(rng);
        if (eps.eps1 == eps.eps2) continue;
        REQUIRE(theorem_prediction(kParams, eps).payoff_value < sup);
    }
}

TEST_CASE("payoff limits along the two families") {
    const double sup = 0.5 * (kParams.alpha + kParams.beta);
    for (double e2 : {1e-3, 1e-6, 1e-9}) {
        const double payoff =
            theorem_prediction(kParams, EpsilonPair{2.0 * e2, e2}).payoff_value;
        REQUIRE(std::abs(payoff - sup) < 10.0 * e2);
    }
    const double tie_limit = 0.25 * (kParams.alpha + kParams.beta + 2.0 * kParams.gamma);
    for (double e : {1e-3, 1e-6, 0.0}) {
        const double payoff = theorem_prediction(kParams, EpsilonPair{e, e}).payoff_value;
        REQUIRE(payoff == Catch::Approx(tie_limit).margin(1e-12));
    }
}

TEST_CASE("nt_state and its induced game") {
    const InitialState nt = nt_state();
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) sum += nt.probability(k);
    REQUIRE(sum == Catch::Approx(1.0).margin(1e-12));

    Rng rng(13);
    for (int n = 0; n < 20; ++n) {
        const BosParams params = random_bos_params(rng);
        const Bimatrix2x2 induced = derived_bimatrix(nt, bos_bimatrix(params));
        const double expected =
            (5 * params.alpha + 5 * params.beta + 6 * params.gamma) / 16.0;
        REQUIRE(induced.at(1, 1).a == Catch::Approx(expected).margin(1e-12));
        REQUIRE(induced.at(1, 1).b == Catch::Approx(expected).margin(1e-12));
    }

    const Bimatrix2x2 g531 = derived_bimatrix(nt, bos_bimatrix(kParams));
    REQUIRE(g531.at(1, 1).a == Catch::Approx(2.875).margin(1e-12));
}

TEST_CASE("baseline_comparison") {
    SECTION("reference point") {
        const BaselineComparison cmp = baseline_comparison(kParams, EpsilonPair{0.01, 0.02});
        REQUIRE(cmp.classical_random == Catch::Approx(2.5).margin(1e-12));
        REQUIRE(cmp.mw_entangled_random == Catch::Approx(2.5).margin(1e-12));
        REQUIRE(cmp.nt_equilibrium == Catch::Approx(2.875).margin(1e-12));
        REQUIRE(cmp.eps_equilibrium == Catch::Approx(3.91).margin(1e-12));
        REQUIRE(cmp.eps_above_nt);
        REQUIRE(cmp.nt_above_random);
    }
    SECTION("the tie edge reports the mixed payoff") {
        const BaselineComparison cmp = baseline_comparison(kParams, EpsilonPair{0, 0});
        REQUIRE(cmp.eps_equilibrium == Catch::Approx(2.5).margin(1e-12));
        REQUIRE_FALSE(cmp.eps_above_nt);
    }
    SECTION("small unequal epsilons beat the NT baseline") {
        Rng rng(404);
        for (int n = 0; n < 100; ++n) {
            const BosParams params = random_bos_params(rng);
            const double t = rng.uniform(1e-6, 0.01);
            const BaselineComparison cmp = baseline_comparison(params, EpsilonPair{t, 2.0 * t});
            REQUIRE(cmp.eps_above_nt);
            REQUIRE(cmp.nt_above_random);
        }
    }
}

TEST_CASE("sweep grids") {
    SECTION("3x3 grid, mixed on the diagonal") {
        const RangeSpec r{0.0, 0.2, 0.1};
        const auto records = sweep(kParams, r, r);
        REQUIRE(records.size() == 9);
        int mixed = 0;
        for (const auto& rec : records) {
            REQUIRE(rec.lemma_valid);
            REQUIRE(rec.payoff_a == Catch::Approx(rec.payoff_b).margin(1e-10));
            if (rec.eps1 == rec.eps2) {
                REQUIRE(rec.selected == "mixed");
                ++mixed;
            }
        }
        REQUIRE(mixed == 3);
        // eps1-major ordering
        REQUIRE(records[0].eps1 == 0.0);
        REQUIRE(records[0].eps2 == 0.0);
        REQUIRE(records[1].eps2 == Catch::Approx(0.1));
        REQUIRE(records[3].eps1 == Catch::Approx(0.1));
    }
    SECTION("single point") {
        const auto records =
            sweep(kParams, RangeSpec{0.01, 0.01, 0.1}, RangeSpec{0.02, 0.02, 0.1});
        REQUIRE(records.size() == 1);
        REQUIRE(records[0].payoff_a == Catch::Approx(3.91).margin(1e-12));
        REQUIRE(records[0].payoff_b == Catch::Approx(3.91).margin(1e-12));
        REQUIRE(records[0].selected == "(0,0)");
    }
    SECTION("empty and invalid grids") {
        REQUIRE(sweep(kParams, RangeSpec{0.5, 0.1, 0.1}, RangeSpec{0, 0.1, 0.1}).empty());
        REQUIRE_THROWS_AS(grid_points(RangeSpec{0.0, 0.5, -0.1}), invalid_grid);
        REQUIRE_THROWS_AS(grid_points(RangeSpec{-0.2, 0.5, 0.1}), invalid_grid);
        REQUIRE_THROWS_AS(grid_points(RangeSpec{0.0, 1.5, 0.1}), invalid_grid);
    }
    SECTION("invalid points are recorded, not evaluated") {
        const auto records = sweep(kParams, RangeSpec{0.3, 0.3, 0.1}, RangeSpec{0.3, 0.3, 0.1});
        REQUIRE(records.size() == 1);
        REQUIRE_FALSE(records[0].lemma_valid);
        REQUIRE(records[0].selected == "none");
        REQUIRE(std::isnan(records[0].payoff_a));

        // points with eps1 + eps2 > 1 are recorded as invalid too
        const auto big = sweep(kParams, RangeSpec{0.6, 0.6, 0.1}, RangeSpec{0.6, 0.6, 0.1});
        REQUIRE(big.size() == 1);
        REQUIRE_FALSE(big[0].lemma_valid);
    }
}
