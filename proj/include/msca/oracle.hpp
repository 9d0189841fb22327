#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>

#include "msca/automaton.hpp"
#include "msca/synthesis.hpp"

namespace msca::oracle {

// Reference implementations of the three syntheses, written directly from
// their set-level definitions (including the "uncontrollable in the automaton
// pruned this iteration" reading) with no code shared with the engine. Slow
// on purpose; they exist to catch the engine lying.

struct DirectResult {
    std::optional<Msca> controller;
    StateSet bad;
    std::size_t iterations = 0;
};

// Uses the automaton and forbidden set; the predicates ride along unused.
DirectResult direct_mpc(const SynthesisInput& input);
DirectResult direct_orchestration(const Msca& input);
DirectResult direct_choreography(const Msca& input, TieBreak tie_break);

enum class ControllerKind { Mpc, Orchestration, Choreography };

struct MaximalityReport {
    bool ok = true;
    // The removed transition whose re-addition broke no required property;
    // absent for an empty result whose bare initial state was already viable.
    std::optional<Transition> counterexample;
    std::string note;
};

// Re-adds each transition the synthesis removed (trimming dangling states
// afterwards) and verifies the enlarged automaton violates some property the
// controller kind requires: non-blocking, staying inside the input, not
// leaving forbidden states or firing forbidden label kinds, controllability
// of the input's necessary transitions, and — for choreographies — the
// branching condition. Throws TooLargeError above 200 input transitions.
MaximalityReport maximality_check(const Msca& input, const StateSet& forbidden,
                                  const std::optional<Msca>& controller, ControllerKind kind);

struct GeneratorOptions {
    std::size_t max_rank = 3;
    std::size_t max_states = 30;
    std::size_t max_transitions = 60;
};

// Well-formed automaton of the given flavor with at least one final state,
// drawn from the passed generator only (same seed, same automaton).
Msca random_automaton(std::mt19937_64& rng, Flavor flavor, const GeneratorOptions& options = {});

} // namespace msca::oracle
