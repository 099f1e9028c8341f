#pragma once

// Battle of the Sexes under the Marinatto-Weber scheme, specialized to the
// one-parameter family of initial states with
//
//   |a00|^2 = |a11|^2 = (1 - (eps1 + eps2)) / 2,  |a01|^2 = eps1,  |a10|^2 = eps2.
//
// Within the validity region (eps1 + eps2 <= 1 - 2*max(eps1, eps2) for unequal
// epsilons, eps < 1/4 for equal ones) the induced game keeps the two strong
// diagonal equilibria, pays both players identically at every equilibrium, and
// the risk-dominance selection reduces to the sign of eps1 - eps2. Payoffs at
// the selected equilibrium approach (alpha + beta)/2 as the epsilons shrink,
// without ever reaching it.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qgt/errors.hpp"
#include "qgt/game.hpp"
#include "qgt/numeric.hpp"
#include "qgt/quantum.hpp"

namespace qgt {

struct BosParams {
    double alpha, beta, gamma;

    BosParams(double alpha_, double beta_, double gamma_)
        : alpha(alpha_), beta(beta_), gamma(gamma_) {
        if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma)))
            throw non_finite("payoff parameters must be finite");
        if (!(alpha > beta && beta > gamma))
            throw ordering_violated("required strict ordering alpha > beta > gamma");
    }

    friend bool operator==(const BosParams&, const BosParams&) = default;
};

/// The coordination game [[ (alpha,beta), (gamma,gamma) ], [ (gamma,gamma), (beta,alpha) ]].
inline Bimatrix2x2 bos_bimatrix(const BosParams& p) {
    return Bimatrix2x2(PayoffPair{p.alpha, p.beta}, PayoffPair{p.gamma, p.gamma},
                       PayoffPair{p.gamma, p.gamma}, PayoffPair{p.beta, p.alpha});
}

struct EpsilonPair {
    double eps1, eps2;  // |a01|^2 and |a10|^2

    EpsilonPair(double eps1_, double eps2_) : eps1(eps1_), eps2(eps2_) {
        if (!(std::isfinite(eps1) && std::isfinite(eps2)))
            throw invalid_epsilon("epsilons must be finite");
        if (eps1 < 0.0 || eps2 < 0.0) throw invalid_epsilon("epsilons must be non-negative");
        if (eps1 + eps2 > 1.0) throw invalid_epsilon("eps1 + eps2 exceeds 1");
    }

    double sum() const { return eps1 + eps2; }

    friend bool operator==(const EpsilonPair&, const EpsilonPair&) = default;
};

/// Initial state with squared moduli ((1-s)/2, eps1, eps2, (1-s)/2), s = eps1+eps2.
inline InitialState epsilon_state(const EpsilonPair& eps) {
    const double half = 0.5 * (1.0 - eps.sum());
    return make_state_from_probs({half, eps.eps1, eps.eps2, half});
}

/// Squared moduli (5/16, 5/16, 1/16, 5/16), the Nawaz-Toor initial state.
inline InitialState nt_state() {
    return make_state_from_probs({5.0 / 16.0, 5.0 / 16.0, 1.0 / 16.0, 5.0 / 16.0});
}

/// The Nawaz-Toor state expressed in epsilon coordinates; it sits exactly on
/// the validity boundary eps1 + eps2 = 1 - 2*max(eps1, eps2).
inline EpsilonPair nt_epsilons() { return EpsilonPair{5.0 / 16.0, 1.0 / 16.0}; }

enum class LemmaBranch { unequal_sum_bound, equal_below_quarter };

/// Validity report for an epsilon pair: whether the state-family assumptions
/// hold, the two best-response margins of the induced game (both must be
/// strictly positive for the diagonal equilibria to survive), and whether the
/// full pipeline confirms preserved equilibria and symmetric payoffs.
struct LemmaReport {
    bool valid = false;
    LemmaBranch branch = LemmaBranch::unequal_sum_bound;
    double margin_11 = 0.0;  // payoff margin of (1,1) over unilateral deviation
    double margin_00 = 0.0;  // payoff margin of (0,0) over unilateral deviation
    bool equilibria_preserved = false;
    bool payoffs_symmetric = false;
    std::string reason;  // empty when valid
};

inline LemmaReport lemma_check(const BosParams& p, const EpsilonPair& eps) {
    LemmaReport rep;
    const double s = eps.sum();
    const double half = 0.5 * (1.0 - s);

    rep.margin_11 = (p.alpha - p.gamma) * (half - eps.eps2) + (p.beta - p.gamma) * (half - eps.eps1);
    rep.margin_00 = (p.alpha - p.gamma) * (half - eps.eps1) + (p.beta - p.gamma) * (half - eps.eps2);

    if (eps.eps1 == eps.eps2) {
        rep.branch = LemmaBranch::equal_below_quarter;
        rep.valid = eps.eps1 < 0.25;
        if (!rep.valid) rep.reason = "equal epsilons require eps < 1/4";
    } else {
        rep.branch = LemmaBranch::unequal_sum_bound;
        rep.valid = s <= 1.0 - 2.0 * std::max(eps.eps1, eps.eps2);
        if (!rep.valid) rep.reason = "requires eps1 + eps2 <= 1 - 2*max(eps1, eps2)";
    }

    const Bimatrix2x2 derived = derived_bimatrix(epsilon_state(eps), bos_bimatrix(p));
    const auto eqs = equilibria(derived);
    bool strong11 = false, strong00 = false;
    for (const auto& e : eqs.pure) {
        if (e.profile == PureProfile{1, 1}) strong11 = e.strong;
        if (e.profile == PureProfile{0, 0}) strong00 = e.strong;
    }
    rep.equilibria_preserved =
        eqs.pure.size() == 2 && strong11 && strong00 && eqs.mixed.has_value();

    rep.payoffs_symmetric = true;
    for (const auto& e : eqs.pure)
        rep.payoffs_symmetric &= scaled_eq(e.payoffs.a, e.payoffs.b, kOracleTol);
    if (eqs.mixed_payoffs)
        rep.payoffs_symmetric &=
            scaled_eq(eqs.mixed_payoffs->a, eqs.mixed_payoffs->b, kOracleTol);

    return rep;
}

/// Closed form for u1*u2 - v1*v2 of the induced game:
/// (alpha + beta - 2*gamma) * (alpha - beta) * (1 - 2*(eps1 + eps2)) * (eps1 - eps2).
/// Only the last factor can change sign inside the validity region.
inline double risk_sign_product(const BosParams& p, const EpsilonPair& eps) {
    const LemmaReport rep = lemma_check(p, eps);
    if (!rep.valid)
        throw precondition_violated("epsilon pair outside the validity region: " + rep.reason);
    return (p.alpha + p.beta - 2.0 * p.gamma) * (p.alpha - p.beta) *
           (1.0 - 2.0 * eps.sum()) * (eps.eps1 - eps.eps2);
}

enum class PredictedSelection { profile_11, profile_00, mixed_half };

inline std::string to_string(PredictedSelection sel) {
    switch (sel) {
        case PredictedSelection::profile_11: return "(1,1)";
        case PredictedSelection::profile_00: return "(0,0)";
        case PredictedSelection::mixed_half: return "mixed (1/2,1/2)";
    }
    return "?";
}

/// Risk-dominant outcome predicted from the epsilons alone, with the payoff at
/// the selected equilibrium.
struct TheoremPrediction {
    PredictedSelection predicted = PredictedSelection::mixed_half;
    double sign_product = 0.0;
    double payoff_value = 0.0;
    /// A published closed form for the tie-branch payoff,
    /// (alpha+beta+2*gamma)/4 - eps*gamma/2, surfaced for comparison. Direct
    /// bilinear evaluation at the (1/2,1/2) equilibrium gives
    /// (alpha+beta+2*gamma)/4 independent of eps, which is what payoff_value
    /// reports; the two disagree for eps > 0 unless gamma = 0.
    std::optional<double> tie_reference_value;
    bool tie_value_discrepancy = false;
};

inline TheoremPrediction theorem_prediction(const BosParams& p, const EpsilonPair& eps) {
    const LemmaReport rep = lemma_check(p, eps);
    if (!rep.valid)
        throw precondition_violated("epsilon pair outside the validity region: " + rep.reason);

    TheoremPrediction pred;
    pred.sign_product = (p.alpha + p.beta - 2.0 * p.gamma) * (p.alpha - p.beta) *
                        (1.0 - 2.0 * eps.sum()) * (eps.eps1 - eps.eps2);

    // Same comparison the selection algorithm performs, evaluated on the
    // closed-form margins (margin_11 = u1 = u2, margin_00 = v1 = v2).
    const double product_u = rep.margin_11 * rep.margin_11;
    const double product_v = rep.margin_00 * rep.margin_00;

    if (scaled_eq(product_u, product_v)) {
        pred.predicted = PredictedSelection::mixed_half;
        pred.payoff_value =
            mixed_payoff(epsilon_state(eps), bos_bimatrix(p), MixedStrategyPair{0.5, 0.5}).a;
        pred.tie_reference_value =
            0.25 * (p.alpha + p.beta + 2.0 * p.gamma) - 0.5 * eps.eps1 * p.gamma;
        pred.tie_value_discrepancy = !scaled_eq(pred.payoff_value, *pred.tie_reference_value);
    } else {
        pred.predicted = product_u > product_v ? PredictedSelection::profile_11
                                               : PredictedSelection::profile_00;
        pred.payoff_value =
            0.5 * ((p.alpha + p.beta) - (p.alpha + p.beta - 2.0 * p.gamma) * eps.sum());
    }
    return pred;
}

/// True when the epsilon-based prediction names the same equilibrium the
/// selection algorithm picks on the induced game.
inline bool prediction_consistency(const BosParams& p, const EpsilonPair& eps) {
    const TheoremPrediction pred = theorem_prediction(p, eps);
    const auto cert = harsanyi_selten_select(derived_bimatrix(epsilon_state(eps), bos_bimatrix(p)));

    if (std::holds_alternative<MixedEquilibrium>(cert.selection))
        return pred.predicted == PredictedSelection::mixed_half;
    const auto& profile = std::get<PureProfile>(cert.selection);
    if (profile == PureProfile{1, 1}) return pred.predicted == PredictedSelection::profile_11;
    return pred.predicted == PredictedSelection::profile_00;
}

/// A deterministic witness that the supremum (alpha + beta)/2 is approachable:
/// an unequal valid pair whose selected-equilibrium payoff lands within delta
/// of it. Uses eps1 = t, eps2 = 2t with t = min(delta / (3*(alpha+beta-2*gamma)), 1/100).
inline EpsilonPair supremum_gap(const BosParams& p, double delta) {
    if (!std::isfinite(delta) || delta <= 0.0 || delta >= 0.5 * (p.alpha + p.beta) - p.gamma)
        throw invalid_delta("delta must lie in (0, (alpha+beta)/2 - gamma)");
    const double t = std::min(delta / (3.0 * (p.alpha + p.beta - 2.0 * p.gamma)), 0.01);
    return EpsilonPair{t, 2.0 * t};
}

/// Side-by-side payoffs: uniformly random play in the classical game, random
/// play on the maximally entangled state, the Nawaz-Toor game's selected
/// equilibrium, and the epsilon-state game's selected equilibrium.
struct BaselineComparison {
    double classical_random;
    double mw_entangled_random;
    double nt_equilibrium;
    double eps_equilibrium;
    bool eps_above_nt;
    bool nt_above_random;
};

inline BaselineComparison baseline_comparison(const BosParams& p, const EpsilonPair& eps) {
    const Bimatrix2x2 game = bos_bimatrix(p);
    const MixedStrategyPair half{0.5, 0.5};

    BaselineComparison cmp{};
    cmp.classical_random = mixed_payoff(make_state({cplx{1, 0}, {}, {}, {}}), game, half).a;
    cmp.mw_entangled_random = mixed_payoff(epsilon_state(EpsilonPair{0.0, 0.0}), game, half).a;
    cmp.nt_equilibrium =
        harsanyi_selten_select(derived_bimatrix(nt_state(), game)).selection_payoffs.a;

    const LemmaReport rep = lemma_check(p, eps);
    if (!rep.valid)
        throw precondition_violated("epsilon pair outside the validity region: " + rep.reason);
    cmp.eps_equilibrium =
        harsanyi_selten_select(derived_bimatrix(epsilon_state(eps), game)).selection_payoffs.a;

    cmp.eps_above_nt = scaled_gt(cmp.eps_equilibrium, cmp.nt_equilibrium);
    cmp.nt_above_random = scaled_gt(cmp.nt_equilibrium, cmp.classical_random);
    return cmp;
}

struct RangeSpec {
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;

    friend bool operator==(const RangeSpec&, const RangeSpec&) = default;
};

/// Grid points min, min+step, ..., up to max (1e-6-of-a-step slack absorbs
/// accumulated rounding). max < min yields an empty range.
inline std::vector<double> grid_points(const RangeSpec& r) {
    if (!(std::isfinite(r.min) && std::isfinite(r.max) && std::isfinite(r.step)))
        throw invalid_grid("grid bounds must be finite");
    if (r.min < 0.0 || r.max > 1.0) throw invalid_grid("grid bounds must lie within [0, 1]");
    if (r.max < r.min) return {};
    if (r.min == r.max) return {r.min};
    if (r.step <= 0.0) throw invalid_grid("grid step must be positive");
    const int last = static_cast<int>(std::floor((r.max - r.min) / r.step + 1e-6));
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(last) + 1);
    for (int k = 0; k <= last; ++k) pts.push_back(r.min + k * r.step);
    return pts;
}

struct SweepRecord {
    double eps1 = 0.0;
    double eps2 = 0.0;
    bool lemma_valid = false;
    std::string selected = "none";
    double payoff_a = std::numeric_limits<double>::quiet_NaN();
    double payoff_b = std::numeric_limits<double>::quiet_NaN();
    double sign_product = std::numeric_limits<double>::quiet_NaN();
};

/// Evaluate the full pipeline over a grid, eps1-major. Points outside the
/// validity region (including eps1 + eps2 > 1) are recorded, not evaluated.
inline std::vector<SweepRecord> sweep(const BosParams& p, const RangeSpec& r1,
                                      const RangeSpec& r2) {
    const auto pts1 = grid_points(r1);
    const auto pts2 = grid_points(r2);

    std::vector<SweepRecord> records;
    records.reserve(pts1.size() * pts2.size());
    for (double e1 : pts1) {
        for (double e2 : pts2) {
            SweepRecord rec;
            rec.eps1 = e1;
            rec.eps2 = e2;
            if (e1 + e2 <= 1.0) {
                const EpsilonPair eps{e1, e2};
                if (lemma_check(p, eps).valid) {
                    rec.lemma_valid = true;
                    const auto cert =
                        harsanyi_selten_select(derived_bimatrix(epsilon_state(eps), bos_bimatrix(p)));
                    rec.selected = selection_label(cert.selection);
                    rec.payoff_a = cert.selection_payoffs.a;
                    rec.payoff_b = cert.selection_payoffs.b;
                    rec.sign_product = risk_sign_product(p, eps);
                }
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

} // namespace qgt
