#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "msca/automaton.hpp"

namespace msca {

// Which branching violation the choreography synthesis prunes per iteration:
// the least or the greatest under (source, label, target) order.
enum class TieBreak { LexMin, LexMax };

// Per-iteration views of the pruning predicate phi_p and the failure
// predicate phi_f, already bound to one snapshot (K, R).
struct IterationPredicates {
    std::function<bool(const Transition&)> phi_p;
    std::function<bool(const Transition&)> phi_f;
};

// A pair of pure predicates over (transition, K, R), in curried form: bind
// partially applies one snapshot — with its dangling states precomputed by
// the engine — so instantiations can set up per-iteration lookup tables.
// Binding the same snapshot twice must yield identical predicates.
struct PredicatePair {
    std::function<IterationPredicates(const Msca& k, const StateSet& r,
                                      const StateSet& dangling_k)>
        bind;
};

struct SynthesisInput {
    Msca automaton;
    StateSet forbidden;
    PredicatePair predicates;
};

struct SynthesisResult {
    // Empty when no controller exists (the initial state turned bad).
    std::optional<Msca> controller;
    // R_s: dangling and uncontrollable states at the fixed point.
    StateSet bad;
    // Number of applications of the step function, the stabilizing one
    // included.
    std::size_t iterations = 0;
    // (|T|, |R|) before the first iteration and after each one.
    std::vector<std::pair<std::size_t, std::size_t>> trace;
};

// Least fixed point of the step that prunes every transition satisfying
// phi_p, marks the source of every necessary transition of the ORIGINAL
// automaton satisfying phi_f as bad, and then marks everything dangling. Both
// predicates are evaluated against the snapshot entering the iteration. The
// controller keeps the states, finals, and surviving transitions whose
// endpoints never turned bad.
//
// Throws InvalidInputError for a broken input and NonMonotonePredicateError
// if the iteration budget |T| + |Q| + 1 is exhausted.
SynthesisResult abstract_synthesize(const SynthesisInput& input);

// phi_p: target bad or source forbidden; phi_f: target bad.
PredicatePair mpc_predicates(StateSet forbidden = {});

// phi_p: request label or bad target. phi_f: no necessary match left in K,
// with endpoints alive, firing the same request of the same principal from
// the same local state.
PredicatePair orchestration_predicates();

// phi_p: request or offer label, bad target, or being the one branching
// violation selected this iteration. phi_f: no necessary match left in K from
// the same source state, with endpoints alive, firing the same offer of the
// same principal.
PredicatePair choreography_predicates(TieBreak tie_break);

// Deleting every permitted request and forbidding states that still must
// request turns the mpc synthesis into agreement enforcement.
SynthesisInput prepare_agreement(const Msca& automaton);

// Same, against offers as well: only matches may remain.
SynthesisInput prepare_strong_agreement(const Msca& automaton);

struct Agreement {};
struct StrongAgreement {};
struct ExplicitForbidden {
    StateSet states;
};
using MpcProperty = std::variant<Agreement, StrongAgreement, ExplicitForbidden>;

// Most permissive controller for the given property.
SynthesisResult mpc(const Msca& automaton, const MpcProperty& property);

// Orchestration synthesis; the input must have orchestration flavor.
SynthesisResult orchestration(const Msca& automaton);

// Choreography synthesis; the input must have choreography flavor. The
// result, when non-empty, has no branching violations left.
SynthesisResult choreography(const Msca& automaton, TieBreak tie_break = TieBreak::LexMin);

} // namespace msca
