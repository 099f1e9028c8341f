#pragma once

// Two-qubit quantization of 2x2 games in the Marinatto-Weber scheme.
//
// Players share an initial two-qubit state and each applies the identity I
// with some probability (p for player A, q for player B) and the bit-flip
// C = sigma_x otherwise. Payoffs are expectations of diagonal payoff
// operators under the final density matrix.
//
// Two independent evaluation routes are provided on purpose:
//   * the explicit density-matrix route: density_of -> evolve -> trace_payoffs,
//   * the closed form over squared amplitudes: closed_form_payoff / mixed_payoff.
// They must agree to 1e-10; the CLI's verify command and the test suite check
// exactly that.
//
// Conventions: basis order (|00>,|01>,|10>,|11>); strategy label 1 means
// "play I" and corresponds to the first row/column of the bimatrix; the state
// cell x_kl of the game therefore multiplies |(1-k)(1-l)>-projectors.

#include <array>
#include <cmath>
#include <complex>

#include "qgt/errors.hpp"
#include "qgt/game.hpp"
#include "qgt/linalg.hpp"
#include "qgt/numeric.hpp"

namespace qgt {

/// Basis index (0..3) of the ket that profile (i, j) maps onto: label 1 plays
/// I and leaves a qubit at |0>, label 0 flips it to |1>.
constexpr int basis_index_of_profile(int i, int j) { return 2 * (1 - i) + (1 - j); }

/// Normalized two-qubit state (a00, a01, a10, a11). Immutable once built.
class InitialState {
public:
    explicit InitialState(const std::array<cplx, 4>& amplitudes) : amp_(amplitudes) {
        double sum = 0.0;
        for (const auto& a : amp_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw non_finite("state amplitudes must be finite");
            sum += std::norm(a);
        }
        if (!(std::abs(sum - 1.0) <= kNormalizationTol))
            throw not_normalized("squared amplitudes sum to " + std::to_string(sum) +
                                 ", expected 1");
    }

    const std::array<cplx, 4>& amplitudes() const { return amp_; }
    cplx amplitude(int k) const { return amp_.at(static_cast<std::size_t>(k)); }

    /// |a_k|^2 in basis order.
    double probability(int k) const { return std::norm(amp_.at(static_cast<std::size_t>(k))); }
    std::array<double, 4> probabilities() const {
        return {std::norm(amp_[0]), std::norm(amp_[1]), std::norm(amp_[2]), std::norm(amp_[3])};
    }

private:
    std::array<cplx, 4> amp_;
};

inline InitialState make_state(const std::array<cplx, 4>& amplitudes) {
    return InitialState(amplitudes);
}

/// Build a state from squared moduli alone; phases are payoff-irrelevant in
/// this scheme (diagonal payoff operators, permutation conjugations), so they
/// default to zero.
inline InitialState make_state_from_probs(const std::array<double, 4>& probs) {
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p)) throw non_finite("probabilities must be finite");
        if (p < 0.0) throw negative_probability("probability " + std::to_string(p) + " < 0");
        sum += p;
    }
    if (!(std::abs(sum - 1.0) <= kNormalizationTol))
        throw not_normalized("probabilities sum to " + std::to_string(sum) + ", expected 1");
    return InitialState({cplx{std::sqrt(probs[0]), 0.0}, cplx{std::sqrt(probs[1]), 0.0},
                         cplx{std::sqrt(probs[2]), 0.0}, cplx{std::sqrt(probs[3]), 0.0}});
}

/// Probabilistic mixture weights: player A plays I with probability p, player
/// B with probability q. Label 1 is the pure-I corner (p = 1), label 0 pure C.
struct MixedStrategyPair {
    double p, q;

    MixedStrategyPair(double p_, double q_) : p(p_), q(q_) {
        if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
            throw precondition_violated("strategy probabilities must lie in [0, 1]");
    }
};

/// 4x4 Hermitian trace-one matrix over the computational basis.
class DensityMatrix {
public:
    explicit DensityMatrix(const Mat4& entries) : m_(entries) {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const cplx delta = m_[mat4_index(r, c)] - std::conj(m_[mat4_index(c, r)]);
                if (std::abs(delta) > kAlgebraTol)
                    throw precondition_violated("density matrix is not Hermitian");
            }
        if (std::abs(trace(m_) - cplx{1.0, 0.0}) > kAlgebraTol)
            throw precondition_violated("density matrix trace differs from 1");
        for (int k = 0; k < 4; ++k)
            if (m_[mat4_index(k, k)].real() < -kAlgebraTol)
                throw precondition_violated("density matrix has a negative diagonal entry");
    }

    cplx entry(int r, int c) const { return m_[mat4_index(r, c)]; }
    const Mat4& entries() const { return m_; }

    std::array<cplx, 4> diagonal() const {
        return {m_[mat4_index(0, 0)], m_[mat4_index(1, 1)], m_[mat4_index(2, 2)],
                m_[mat4_index(3, 3)]};
    }

private:
    Mat4 m_;
};

/// rho = |psi><psi|
inline DensityMatrix density_of(const InitialState& state) {
    Mat4 m{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m[mat4_index(r, c)] = state.amplitude(r) * std::conj(state.amplitude(c));
    return DensityMatrix(m);
}

/// Final state of the scheme: the (p, q)-weighted mixture of rho conjugated by
/// I(x)I, I(x)C, C(x)I and C(x)C.
inline DensityMatrix evolve(const DensityMatrix& rho_in, const MixedStrategyPair& s) {
    static const std::array<Mat4, 4> kOperators = {
        kron(kIdentity2, kIdentity2),
        kron(kIdentity2, kPauliX),
        kron(kPauliX, kIdentity2),
        kron(kPauliX, kPauliX),
    };
    const std::array<double, 4> weights = {
        s.p * s.q,
        s.p * (1.0 - s.q),
        (1.0 - s.p) * s.q,
        (1.0 - s.p) * (1.0 - s.q),
    };
    Mat4 out{};
    for (int term = 0; term < 4; ++term) {
        if (weights[term] == 0.0) continue;
        const Mat4 contribution = conjugate_by(kOperators[term], rho_in.entries());
        for (int k = 0; k < 16; ++k) out[k] += weights[term] * contribution[k];
    }
    return DensityMatrix(out);
}

/// Diagonals of the payoff observables P_A, P_B in basis order: cell (k, l) of
/// the game contributes to the |(1-k)(1-l)> projector.
struct PayoffOperatorPair {
    std::array<double, 4> diag_a;
    std::array<double, 4> diag_b;
};

inline PayoffOperatorPair payoff_operators(const Bimatrix2x2& game) {
    PayoffOperatorPair ops{};
    for (int i : {1, 0})
        for (int j : {1, 0}) {
            const int k = basis_index_of_profile(i, j);
            ops.diag_a[k] = game.at(i, j).a;
            ops.diag_b[k] = game.at(i, j).b;
        }
    return ops;
}

/// Tr{P rho} for both players' diagonal observables.
inline PayoffPair trace_payoffs(const DensityMatrix& rho_fin, const PayoffOperatorPair& ops) {
    PayoffPair out{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        const cplx d = rho_fin.entry(k, k);
        if (std::abs(d.imag()) >= kAlgebraTol)
            throw non_real_diagonal("density matrix diagonal has imaginary residue");
        out.a += ops.diag_a[k] * d.real();
        out.b += ops.diag_b[k] * d.real();
    }
    return out;
}

/// Closed form for the pure-profile payoffs: the squared amplitudes, permuted
/// according to which bit flips the profile applies, dotted with the game's
/// cells. Addition on labels is modulo 2.
inline PayoffPair closed_form_payoff(const InitialState& state, const Bimatrix2x2& game,
                                     const PureProfile& profile) {
    const int i = profile.i;
    const int j = profile.j;
    auto prob = [&](int row_bit, int col_bit) { return state.probability(2 * row_bit + col_bit); };
    const std::array<double, 4> coeff = {
        prob(i ^ 1, j ^ 1),
        prob(i ^ 1, j),
        prob(i, j ^ 1),
        prob(i, j),
    };
    const std::array<PayoffPair, 4> cells = {game.at(1, 1), game.at(1, 0), game.at(0, 1),
                                             game.at(0, 0)};
    PayoffPair out{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        out.a += coeff[k] * cells[k].a;
        out.b += coeff[k] * cells[k].b;
    }
    return out;
}

/// The induced classical game: cell (i, j) holds closed_form_payoff at (i, j).
/// Equals the input game exactly when the state is |00>.
inline Bimatrix2x2 derived_bimatrix(const InitialState& state, const Bimatrix2x2& game) {
    return Bimatrix2x2(closed_form_payoff(state, game, PureProfile{1, 1}),
                       closed_form_payoff(state, game, PureProfile{1, 0}),
                       closed_form_payoff(state, game, PureProfile{0, 1}),
                       closed_form_payoff(state, game, PureProfile{0, 0}));
}

/// Expected payoffs under mixed strategies: the (p, q)-bilinear combination of
/// the four pure-profile payoffs.
inline PayoffPair mixed_payoff(const InitialState& state, const Bimatrix2x2& game,
                               const MixedStrategyPair& s) {
    const std::array<double, 4> weights = {
        s.p * s.q,
        s.p * (1.0 - s.q),
        (1.0 - s.p) * s.q,
        (1.0 - s.p) * (1.0 - s.q),
    };
    const std::array<PureProfile, 4> profiles = {PureProfile{1, 1}, PureProfile{1, 0},
                                                 PureProfile{0, 1}, PureProfile{0, 0}};
    PayoffPair out{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        const PayoffPair pi = closed_form_payoff(state, game, profiles[k]);
        out.a += weights[k] * pi.a;
        out.b += weights[k] * pi.b;
    }
    return out;
}

} // namespace qgt
