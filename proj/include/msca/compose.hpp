#pragma once

#include <vector>

#include "msca/automaton.hpp"

namespace msca {

// N-ary product of contract automata. Two operands ready on complementary
// request/offer elements synchronize into a match; a lone move is emitted
// only when no other operand is ready to complete it. Operand transitions
// that already carry a match label interleave untouched — earlier
// compositions are never rearranged, which is why the product is not
// associative. Only states reachable from the combined initial state are
// kept. A match is necessary as soon as either participant is.
//
// Throws EmptyOperandListError, MixedFlavorError, or ValidationError.
Msca compose(const std::vector<Msca>& operands);

} // namespace msca
