#pragma once

#include <set>

#include "msca/automaton.hpp"

namespace msca {

// States that are unreachable from the initial state or cannot reach a final
// state.
StateSet dangling(const Msca& automaton);

// Is there an accepting run whose labels contain no request? The empty run
// counts when the initial state is final.
bool admits_agreement(const Msca& automaton);

// Is there an accepting run whose labels are matches only?
bool admits_strong_agreement(const Msca& automaton);

// No request lies on any path from the initial state to a final state, i.e.
// every accepting run is an agreement.
bool is_safe(const Msca& automaton);

// No request or offer lies on any such path.
bool is_strongly_safe(const Msca& automaton);

// Transitions breaking the branching condition: a match (q1 -a-> _) such that
// some other state q2 agrees with q1 on the sender's local state but has no
// a-transition of its own. Both q1 and q2 range over states that are neither
// dangling nor in `excluded`.
std::set<Transition> branching_violations(const Msca& automaton,
                                          const StateSet& excluded = {});

// Same initial state, and states / finals / transitions of `part` contained
// in those of `whole`. With ignore_modality, transitions are compared without
// their modality. Throws RankMismatchError when the ranks differ.
bool is_sub_automaton(const Msca& part, const Msca& whole, bool ignore_modality = false);

} // namespace msca
