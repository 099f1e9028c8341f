#pragma once

// 2x2 bimatrix games: Nash equilibrium enumeration and the Harsanyi-Selten
// payoff-dominance / risk-dominance selection between two strong diagonal
// equilibria.
//
// Index convention, fixed globally: strategy label 1 is the first row/column
// of the bimatrix, label 0 the second. at(i, j) takes strategy labels, so
// at(1, 1) is the top-left cell.

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qgt/errors.hpp"
#include "qgt/numeric.hpp"

namespace qgt {

struct PayoffPair {
    double a = 0.0;  // player A (row)
    double b = 0.0;  // player B (column)

    friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

struct PureProfile {
    int i = 0;  // player A strategy label
    int j = 0;  // player B strategy label

    PureProfile(int i_, int j_) : i(i_), j(j_) {
        if ((i != 0 && i != 1) || (j != 0 && j != 1))
            throw precondition_violated("strategy labels must be 0 or 1");
    }

    friend bool operator==(const PureProfile&, const PureProfile&) = default;
};

class Bimatrix2x2 {
public:
    /// Cells in matrix layout: (1,1), (1,0) on the first row, (0,1), (0,0) below.
    Bimatrix2x2(PayoffPair c11, PayoffPair c10, PayoffPair c01, PayoffPair c00) {
        cells_[1][1] = c11;
        cells_[1][0] = c10;
        cells_[0][1] = c01;
        cells_[0][0] = c00;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!std::isfinite(cells_[i][j].a) || !std::isfinite(cells_[i][j].b))
                    throw non_finite("bimatrix payoffs must be finite");
    }

    /// Payoff pair at a strategy-label pair (i, j), each in {0, 1}.
    const PayoffPair& at(int i, int j) const { return cells_[i][j]; }
    const PayoffPair& at(const PureProfile& p) const { return cells_[p.i][p.j]; }

    friend bool operator==(const Bimatrix2x2&, const Bimatrix2x2&) = default;

private:
    std::array<std::array<PayoffPair, 2>, 2> cells_{};
};

/// Swap both players' strategy labels (reverse rows and columns).
inline Bimatrix2x2 relabel(const Bimatrix2x2& g) {
    return Bimatrix2x2(g.at(0, 0), g.at(0, 1), g.at(1, 0), g.at(1, 1));
}

/// Swap only player B's strategy labels (reverse columns). Moves equilibria
/// sitting on the anti-diagonal onto the main diagonal.
inline Bimatrix2x2 relabel_columns(const Bimatrix2x2& g) {
    return Bimatrix2x2(g.at(1, 0), g.at(1, 1), g.at(0, 0), g.at(0, 1));
}

/// Replace every payoff x of both players by scale * x + shift.
inline Bimatrix2x2 affine_transform(const Bimatrix2x2& g, double scale, double shift) {
    auto f = [&](PayoffPair p) { return PayoffPair{scale * p.a + shift, scale * p.b + shift}; };
    return Bimatrix2x2(f(g.at(1, 1)), f(g.at(1, 0)), f(g.at(0, 1)), f(g.at(0, 0)));
}

inline double max_abs_difference(const Bimatrix2x2& x, const Bimatrix2x2& y) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            worst = std::max(worst, std::abs(x.at(i, j).a - y.at(i, j).a));
            worst = std::max(worst, std::abs(x.at(i, j).b - y.at(i, j).b));
        }
    return worst;
}

struct MixedEquilibrium {
    double s1 = 0.0;  // player A's weight on strategy 1
    double s2 = 0.0;  // player B's weight on strategy 1

    MixedEquilibrium(double s1_, double s2_) : s1(s1_), s2(s2_) {
        if (!(s1 >= 0.0 && s1 <= 1.0 && s2 >= 0.0 && s2 <= 1.0))
            throw precondition_violated("mixed-strategy weights must lie in [0, 1]");
    }
};

struct PureEquilibrium {
    PureProfile profile;
    bool strong = false;
    PayoffPair payoffs;
};

struct EquilibriumSet {
    std::vector<PureEquilibrium> pure;
    std::optional<MixedEquilibrium> mixed;
    std::optional<PayoffPair> mixed_payoffs;
};

using Equilibrium = std::variant<PureProfile, MixedEquilibrium>;

/// Differences that drive the selection algorithm:
///   u1 = a11 - a21, v1 = a22 - a12, u2 = b11 - b12, v2 = b22 - b21.
struct DiagonalDifferences {
    double u1, v1, u2, v2;
};

inline DiagonalDifferences diagonal_differences(const Bimatrix2x2& g) {
    return DiagonalDifferences{
        g.at(1, 1).a - g.at(0, 1).a,
        g.at(0, 0).a - g.at(1, 0).a,
        g.at(1, 1).b - g.at(1, 0).b,
        g.at(0, 0).b - g.at(0, 1).b,
    };
}

/// All pure Nash equilibria, in row-major label order (1,1), (1,0), (0,1), (0,0).
/// A profile qualifies when no unilateral deviation improves the deviator;
/// it is strong when every deviation strictly loses. Comparisons treat values
/// equal within a 1e-12 scale-aware guard as ties.
inline std::vector<PureEquilibrium> pure_equilibria(const Bimatrix2x2& g) {
    std::vector<PureEquilibrium> out;
    for (int i : {1, 0}) {
        for (int j : {1, 0}) {
            const PayoffPair own = g.at(i, j);
            const double dev_a = g.at(1 - i, j).a;
            const double dev_b = g.at(i, 1 - j).b;
            if (scaled_ge(own.a, dev_a) && scaled_ge(own.b, dev_b)) {
                const bool strong = scaled_gt(own.a, dev_a) && scaled_gt(own.b, dev_b);
                out.push_back(PureEquilibrium{PureProfile{i, j}, strong, own});
            }
        }
    }
    return out;
}

inline bool has_strong_diagonal_equilibria(const Bimatrix2x2& g) {
    bool s11 = false, s00 = false;
    for (const auto& eq : pure_equilibria(g)) {
        if (eq.profile == PureProfile{1, 1}) s11 = eq.strong;
        if (eq.profile == PureProfile{0, 0}) s00 = eq.strong;
    }
    return s11 && s00;
}

/// The indifference-making mixed equilibrium (s1, s2) = (v2/(u2+v2), v1/(u1+v1)).
/// Defined only when (1,1) and (0,0) are strong equilibria, which makes all
/// four differences positive.
inline MixedEquilibrium mixed_equilibrium(const Bimatrix2x2& g) {
    if (!has_strong_diagonal_equilibria(g))
        throw precondition_violated(
            "mixed equilibrium formula requires strong equilibria at (1,1) and (0,0)");
    const auto d = diagonal_differences(g);
    return MixedEquilibrium{d.v2 / (d.u2 + d.v2), d.v1 / (d.u1 + d.v1)};
}

inline PayoffPair equilibrium_payoffs(const Bimatrix2x2& g, const PureProfile& p) {
    return g.at(p);
}

/// Bilinear expected payoffs when A plays 1 with probability s1 and B with s2.
inline PayoffPair equilibrium_payoffs(const Bimatrix2x2& g, const MixedEquilibrium& m) {
    const double w1[2] = {1.0 - m.s1, m.s1};
    const double w2[2] = {1.0 - m.s2, m.s2};
    PayoffPair out{0.0, 0.0};
    for (int i : {1, 0})
        for (int j : {1, 0}) {
            out.a += w1[i] * w2[j] * g.at(i, j).a;
            out.b += w1[i] * w2[j] * g.at(i, j).b;
        }
    return out;
}

inline PayoffPair equilibrium_payoffs(const Bimatrix2x2& g, const Equilibrium& eq) {
    return std::visit([&](const auto& e) { return equilibrium_payoffs(g, e); }, eq);
}

/// Pure equilibria plus, when (1,1) and (0,0) are both strong, the mixed one.
inline EquilibriumSet equilibria(const Bimatrix2x2& g) {
    EquilibriumSet set;
    set.pure = pure_equilibria(g);
    if (has_strong_diagonal_equilibria(g)) {
        set.mixed = mixed_equilibrium(g);
        set.mixed_payoffs = equilibrium_payoffs(g, *set.mixed);
    }
    return set;
}

/// The equilibrium giving both players at least as much as every other
/// equilibrium, strictly more for someone against each rival. Ties in both
/// coordinates block dominance, so equal-payoff equilibria yield nullopt.
inline std::optional<Equilibrium> payoff_dominant(const Bimatrix2x2& g,
                                                  const EquilibriumSet& eqs) {
    std::vector<std::pair<Equilibrium, PayoffPair>> candidates;
    for (const auto& p : eqs.pure) candidates.emplace_back(p.profile, equilibrium_payoffs(g, p.profile));
    if (eqs.mixed) candidates.emplace_back(*eqs.mixed, equilibrium_payoffs(g, *eqs.mixed));

    for (std::size_t c = 0; c < candidates.size(); ++c) {
        bool dominant = true;
        for (std::size_t r = 0; r < candidates.size() && dominant; ++r) {
            if (r == c) continue;
            const auto& mine = candidates[c].second;
            const auto& theirs = candidates[r].second;
            dominant = scaled_ge(mine.a, theirs.a) && scaled_ge(mine.b, theirs.b) &&
                       (scaled_gt(mine.a, theirs.a) || scaled_gt(mine.b, theirs.b));
        }
        if (dominant) return candidates[c].first;
    }
    return std::nullopt;
}

enum class SelectionRule { payoff_dominance, risk_dominance, mixed_tie };

inline std::string to_string(SelectionRule rule) {
    switch (rule) {
        case SelectionRule::payoff_dominance: return "payoff-dominance";
        case SelectionRule::risk_dominance: return "risk-dominance";
        case SelectionRule::mixed_tie: return "mixed-tie";
    }
    return "?";
}

struct RiskDominanceCertificate {
    double u1, v1, u2, v2;
    double product_u;  // u1 * u2
    double product_v;  // v1 * v2
    Equilibrium selection;
    PayoffPair selection_payoffs;
    SelectionRule selected_by;
    /// Set when two distinct equilibria carry identical payoff pairs, the case
    /// in which weak payoff dominance deliberately selects nothing.
    bool payoff_tie_noted = false;
};

inline std::string selection_label(const Equilibrium& eq) {
    if (const auto* p = std::get_if<PureProfile>(&eq)) {
        std::ostringstream os;
        os << "(" << p->i << "," << p->j << ")";
        return os.str();
    }
    return "mixed";
}

/// Harsanyi-Selten selection between the three equilibria of a game with
/// strong equilibria at (1,1) and (0,0): a payoff-dominant equilibrium wins
/// outright; otherwise compare u1*u2 against v1*v2, equal-within-tolerance
/// falling back to the mixed equilibrium. Games whose strong equilibria sit
/// on the anti-diagonal must be passed through relabel() first.
inline RiskDominanceCertificate harsanyi_selten_select(const Bimatrix2x2& g) {
    if (!has_strong_diagonal_equilibria(g))
        throw precondition_violated(
            "selection requires strong equilibria at (1,1) and (0,0); "
            "normalize anti-diagonal games with relabel_columns() first");

    const auto eqs = equilibria(g);
    const auto d = diagonal_differences(g);

    RiskDominanceCertificate cert{
        d.u1, d.v1, d.u2, d.v2,
        d.u1 * d.u2, d.v1 * d.v2,
        PureProfile{1, 1}, PayoffPair{}, SelectionRule::risk_dominance, false};

    std::vector<PayoffPair> payoffs;
    for (const auto& p : eqs.pure) payoffs.push_back(p.payoffs);
    if (eqs.mixed_payoffs) payoffs.push_back(*eqs.mixed_payoffs);
    for (std::size_t x = 0; x < payoffs.size() && !cert.payoff_tie_noted; ++x)
        for (std::size_t y = x + 1; y < payoffs.size() && !cert.payoff_tie_noted; ++y)
            cert.payoff_tie_noted =
                scaled_eq(payoffs[x].a, payoffs[y].a) && scaled_eq(payoffs[x].b, payoffs[y].b);

    if (auto dominant = payoff_dominant(g, eqs)) {
        cert.selection = *dominant;
        cert.selected_by = SelectionRule::payoff_dominance;
    } else if (scaled_eq(cert.product_u, cert.product_v)) {
        cert.selection = *eqs.mixed;
        cert.selected_by = SelectionRule::mixed_tie;
    } else if (cert.product_u > cert.product_v) {
        cert.selection = PureProfile{1, 1};
        cert.selected_by = SelectionRule::risk_dominance;
    } else {
        cert.selection = PureProfile{0, 0};
        cert.selected_by = SelectionRule::risk_dominance;
    }
    cert.selection_payoffs = equilibrium_payoffs(g, cert.selection);
    return cert;
}

} // namespace qgt
