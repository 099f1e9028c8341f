#pragma once

// Scenario files: the JSON documents the CLI consumes.
//
// A scenario names exactly one game,
//     "bos":      {"alpha": 5, "beta": 3, "gamma": 1}
//     "bimatrix": [[[5,3],[1,1]],[[1,1],[3,5]]]         (rows: strategy 1 first)
// and exactly one state or sweep,
//     "amplitudes": [[re,im],[re,im],[re,im],[re,im]]   (basis |00>,|01>,|10>,|11>)
//     "probs":      [p00, p01, p10, p11]
//     "epsilons":   [eps1, eps2]
//     "preset":     "classical" | "entangled" | "nt"
//     "sweep":      {"eps1": {"min":0,"max":0.2,"step":0.1}, "eps2": {...}}

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qgt/bos.hpp"
#include "qgt/errors.hpp"
#include "qgt/game.hpp"
#include "qgt/quantum.hpp"

namespace qgt {

enum class Preset { classical, entangled, nt };

inline std::string to_string(Preset p) {
    switch (p) {
        case Preset::classical: return "classical";
        case Preset::entangled: return "entangled";
        case Preset::nt: return "nt";
    }
    return "?";
}

struct SweepSpec {
    RangeSpec eps1;
    RangeSpec eps2;

    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct Scenario {
    // game (exactly one set)
    std::optional<BosParams> bos;
    std::optional<Bimatrix2x2> bimatrix;

    // state or sweep (exactly one set)
    std::optional<std::array<cplx, 4>> amplitudes;
    std::optional<std::array<double, 4>> probs;
    std::optional<EpsilonPair> epsilons;
    std::optional<Preset> preset;
    std::optional<SweepSpec> sweep_spec;

    bool is_bos() const { return bos.has_value(); }
    bool has_sweep() const { return sweep_spec.has_value(); }

    Bimatrix2x2 game() const { return bos ? bos_bimatrix(*bos) : *bimatrix; }

    InitialState state() const {
        if (amplitudes) return make_state(*amplitudes);
        if (probs) return make_state_from_probs(*probs);
        if (epsilons) return epsilon_state(*epsilons);
        if (preset) {
            switch (*preset) {
                case Preset::classical:
                    return make_state({cplx{1, 0}, cplx{}, cplx{}, cplx{}});
                case Preset::entangled:
                    return epsilon_state(EpsilonPair{0.0, 0.0});
                case Preset::nt:
                    return nt_state();
            }
        }
        throw scenario_error("scenario has a sweep spec, not a single state");
    }

    /// Epsilon coordinates when the state belongs to the analyzed family:
    /// explicit epsilons, or the entangled / Nawaz-Toor presets.
    std::optional<EpsilonPair> state_epsilons() const {
        if (epsilons) return epsilons;
        if (preset == Preset::entangled) return EpsilonPair{0.0, 0.0};
        if (preset == Preset::nt) return nt_epsilons();
        return std::nullopt;
    }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

namespace detail {

inline double as_number(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number()) throw scenario_error(where + ": expected a number");
    return j.get<double>();
}

inline RangeSpec parse_range(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw scenario_error(where + ": expected an object");
    for (const auto& [key, value] : j.items())
        if (key != "min" && key != "max" && key != "step")
            throw scenario_error(where + ": unknown field \"" + key + "\"");
    if (!j.contains("min") || !j.contains("max") || !j.contains("step"))
        throw scenario_error(where + ": needs min, max and step");
    return RangeSpec{as_number(j.at("min"), where + ".min"),
                     as_number(j.at("max"), where + ".max"),
                     as_number(j.at("step"), where + ".step")};
}

} // namespace detail

inline Scenario parse_scenario(const nlohmann::json& doc) {
    using detail::as_number;
    if (!doc.is_object()) throw scenario_error("scenario: expected a JSON object");

    static const char* known[] = {"bos",      "bimatrix", "amplitudes", "probs",
                                  "epsilons", "preset",   "sweep"};
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok |= key == k;
        if (!ok) throw scenario_error("scenario: unknown field \"" + key + "\"");
    }

    Scenario sc;

    if (doc.contains("bos")) {
        const auto& b = doc.at("bos");
        if (!b.is_object()) throw scenario_error("bos: expected an object");
        for (const auto& [key, value] : b.items())
            if (key != "alpha" && key != "beta" && key != "gamma")
                throw scenario_error("bos: unknown field \"" + key + "\"");
        if (!b.contains("alpha") || !b.contains("beta") || !b.contains("gamma"))
            throw scenario_error("bos: needs alpha, beta and gamma");
        sc.bos = BosParams{as_number(b.at("alpha"), "bos.alpha"),
                           as_number(b.at("beta"), "bos.beta"),
                           as_number(b.at("gamma"), "bos.gamma")};
    }
    if (doc.contains("bimatrix")) {
        const auto& m = doc.at("bimatrix");
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
            m[0].size() != 2 || m[1].size() != 2)
            throw scenario_error("bimatrix: expected a 2x2 array of [a,b] pairs");
        std::array<std::array<PayoffPair, 2>, 2> cells;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                const auto& cell = m[r][c];
                std::ostringstream where;
                where << "bimatrix[" << r << "][" << c << "]";
                if (!cell.is_array() || cell.size() != 2)
                    throw scenario_error(where.str() + ": expected [a, b]");
                cells[r][c] = PayoffPair{as_number(cell[0], where.str() + "[0]"),
                                         as_number(cell[1], where.str() + "[1]")};
            }
        // row 0 of the document is the strategy-1 row
        sc.bimatrix = Bimatrix2x2(cells[0][0], cells[0][1], cells[1][0], cells[1][1]);
    }
    if (sc.bos && sc.bimatrix) throw scenario_error("scenario: give either bos or bimatrix, not both");
    if (!sc.bos && !sc.bimatrix) throw scenario_error("scenario: needs a bos or bimatrix game");

    int state_specs = 0;
    if (doc.contains("amplitudes")) {
        ++state_specs;
        const auto& a = doc.at("amplitudes");
        if (!a.is_array() || a.size() != 4)
            throw scenario_error("amplitudes: expected four [re, im] pairs");
        std::array<cplx, 4> amp;
        for (int k = 0; k < 4; ++k) {
            std::ostringstream where;
            where << "amplitudes[" << k << "]";
            if (!a[k].is_array() || a[k].size() != 2)
                throw scenario_error(where.str() + ": expected [re, im]");
            amp[k] = cplx{as_number(a[k][0], where.str() + "[0]"),
                          as_number(a[k][1], where.str() + "[1]")};
        }
        sc.amplitudes = amp;
    }
    if (doc.contains("probs")) {
        ++state_specs;
        const auto& p = doc.at("probs");
        if (!p.is_array() || p.size() != 4) throw scenario_error("probs: expected four numbers");
        std::array<double, 4> probs;
        for (int k = 0; k < 4; ++k) {
            std::ostringstream where;
            where << "probs[" << k << "]";
            probs[k] = as_number(p[k], where.str());
        }
        sc.probs = probs;
    }
    if (doc.contains("epsilons")) {
        ++state_specs;
        const auto& e = doc.at("epsilons");
        if (!e.is_array() || e.size() != 2) throw scenario_error("epsilons: expected [eps1, eps2]");
        sc.epsilons = EpsilonPair{as_number(e[0], "epsilons[0]"), as_number(e[1], "epsilons[1]")};
    }
    if (doc.contains("preset")) {
        ++state_specs;
        const auto& p = doc.at("preset");
        if (!p.is_string()) throw scenario_error("preset: expected a string");
        const std::string name = p.get<std::string>();
        if (name == "classical") sc.preset = Preset::classical;
        else if (name == "entangled") sc.preset = Preset::entangled;
        else if (name == "nt") sc.preset = Preset::nt;
        else throw scenario_error("preset: unknown preset \"" + name + "\"");
    }
    if (doc.contains("sweep")) {
        ++state_specs;
        const auto& s = doc.at("sweep");
        if (!s.is_object()) throw scenario_error("sweep: expected an object");
        for (const auto& [key, value] : s.items())
            if (key != "eps1" && key != "eps2")
                throw scenario_error("sweep: unknown field \"" + key + "\"");
        if (!s.contains("eps1") || !s.contains("eps2"))
            throw scenario_error("sweep: needs eps1 and eps2 ranges");
        sc.sweep_spec = SweepSpec{detail::parse_range(s.at("eps1"), "sweep.eps1"),
                                  detail::parse_range(s.at("eps2"), "sweep.eps2")};
        if (!sc.bos) throw scenario_error("sweep: requires a bos game");
    }
    if (state_specs != 1)
        throw scenario_error(
            "scenario: needs exactly one of amplitudes, probs, epsilons, preset or sweep");

    // Surface invalid values now, with scenario context, rather than later.
    if (!sc.has_sweep()) (void)sc.state();

    return sc;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw scenario_error("cannot open scenario file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw scenario_error(path + ": " + e.what());
    }
    try {
        return parse_scenario(doc);
    } catch (const scenario_error&) {
        throw;
    } catch (const error& e) {
        throw scenario_error(path + ": " + e.what());
    }
}

inline nlohmann::json scenario_to_json(const Scenario& sc) {
    nlohmann::json doc = nlohmann::json::object();
    if (sc.bos)
        doc["bos"] = {{"alpha", sc.bos->alpha}, {"beta", sc.bos->beta}, {"gamma", sc.bos->gamma}};
    if (sc.bimatrix) {
        const auto& g = *sc.bimatrix;
        doc["bimatrix"] = {
            {{g.at(1, 1).a, g.at(1, 1).b}, {g.at(1, 0).a, g.at(1, 0).b}},
            {{g.at(0, 1).a, g.at(0, 1).b}, {g.at(0, 0).a, g.at(0, 0).b}},
        };
    }
    if (sc.amplitudes) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& amp : *sc.amplitudes) a.push_back({amp.real(), amp.imag()});
        doc["amplitudes"] = a;
    }
    if (sc.probs) doc["probs"] = *sc.probs;
    if (sc.epsilons) doc["epsilons"] = {sc.epsilons->eps1, sc.epsilons->eps2};
    if (sc.preset) doc["preset"] = to_string(*sc.preset);
    if (sc.sweep_spec) {
        auto range = [](const RangeSpec& r) {
            return nlohmann::json{{"min", r.min}, {"max", r.max}, {"step", r.step}};
        };
        doc["sweep"] = {{"eps1", range(sc.sweep_spec->eps1)}, {"eps2", range(sc.sweep_spec->eps2)}};
    }
    return doc;
}

} // namespace qgt
