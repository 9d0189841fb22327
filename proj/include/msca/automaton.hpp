#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "msca/action.hpp"
#include "msca/errors.hpp"

namespace msca {

// A state of a rank-n automaton: one local state label per principal.
struct StateVector {
    std::vector<std::string> parts;

    StateVector() = default;
    StateVector(std::initializer_list<std::string> init) : parts(init) {}
    explicit StateVector(std::vector<std::string> init) : parts(std::move(init)) {}

    std::size_t rank() const { return parts.size(); }
    const std::string& operator[](std::size_t i) const { return parts[i]; }

    // "c0,c1,b0" — diagnostics and DOT node names.
    std::string joined() const;

    friend auto operator<=>(const StateVector&, const StateVector&) = default;
};

using StateSet = std::set<StateVector>;

// Permitted transitions are controllable and may be pruned freely; necessary
// ones survive unless the synthesis proves them controllable another way.
enum class Modality { Permitted, Necessary };

// Which labels may be necessary: requests/matches under orchestration,
// offers/matches under choreography.
enum class Flavor { Orchestration, Choreography };

struct Transition {
    StateVector from;
    ActionVector label;
    StateVector to;
    Modality modality = Modality::Permitted;

    bool necessary() const { return modality == Modality::Necessary; }

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

// A modal service contract automaton. Plain data; every operation on it is a
// free function, and all containers are ordered so iteration (and therefore
// every algorithm here) is deterministic.
struct Msca {
    std::string name;
    std::size_t rank = 1;
    StateSet states;
    StateVector initial;
    StateSet finals;
    std::set<Transition> transitions;
    Flavor flavor = Flavor::Orchestration;

    friend bool operator==(const Msca&, const Msca&) = default;
};

// All structural violations, one message each. Empty means well-formed:
// shapes agree with the rank, endpoints are known states, labels classify,
// idle label positions do not move their principal, necessary transitions
// respect the flavor, no triple is both permitted and necessary, and rank-1
// automata never request and offer the same action name.
std::vector<std::string> validate(const Msca& automaton);

// Throws ValidationError listing every violation.
void validate_or_throw(const Msca& automaton);

} // namespace msca
