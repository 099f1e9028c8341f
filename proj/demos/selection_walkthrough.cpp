// Walkthrough: how the choice of initial state changes the Battle of the
// Sexes outcome. Prints the induced game, the selected equilibrium and its
// payoffs for |00> (classical), the maximally entangled state, the
// Nawaz-Toor state and a slightly asymmetric epsilon state.

#include <cstdio>

#include "qgt/qgt.hpp"

using namespace qgt;

static void show(const char* name, const InitialState& state, const Bimatrix2x2& game) {
    const Bimatrix2x2 induced = derived_bimatrix(state, game);
    std::printf("%s\n", name);
    std::printf("  induced game: (1,1)->(%.4g, %.4g)  (1,0)->(%.4g, %.4g)\n",
                induced.at(1, 1).a, induced.at(1, 1).b, induced.at(1, 0).a, induced.at(1, 0).b);
    std::printf("                (0,1)->(%.4g, %.4g)  (0,0)->(%.4g, %.4g)\n",
                induced.at(0, 1).a, induced.at(0, 1).b, induced.at(0, 0).a, induced.at(0, 0).b);
    const auto cert = harsanyi_selten_select(induced);
    std::printf("  selected %s by %s, payoffs (%.6g, %.6g)\n\n",
                selection_label(cert.selection).c_str(), to_string(cert.selected_by).c_str(),
                cert.selection_payoffs.a, cert.selection_payoffs.b);
}

int main() {
    const BosParams params{5, 3, 1};
    const Bimatrix2x2 game = bos_bimatrix(params);

    show("|00> (classical play)", make_state({cplx{1, 0}, {}, {}, {}}), game);
    show("(|00> + |11>)/sqrt(2)", epsilon_state(EpsilonPair{0, 0}), game);
    show("Nawaz-Toor state", nt_state(), game);
    show("epsilon state (0.01, 0.02)", epsilon_state(EpsilonPair{0.01, 0.02}), game);

    const EpsilonPair witness = supremum_gap(params, 0.01);
    const auto pred = theorem_prediction(params, witness);
    std::printf("witness (%.6g, %.6g): payoff %.9g, within 0.01 of (alpha+beta)/2 = %g\n",
                witness.eps1, witness.eps2, pred.payoff_value,
                0.5 * (params.alpha + params.beta));
    return 0;
}
