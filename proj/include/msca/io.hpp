#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "msca/automaton.hpp"

namespace msca {

// Canonical JSON form: object keys in fixed order, state and transition
// arrays sorted, labels encoded as "-", "?name", "!name". Serializing the
// same automaton twice yields identical bytes.
std::string to_json(const Msca& automaton);

// Inverse of to_json; also accepts unsorted arrays. Throws ParseError (with
// the offending field's path) on malformed documents and ValidationError on
// well-formed documents describing broken automata.
Msca from_json(const std::string& text);

Msca load_automaton(const std::filesystem::path& path);
void save_automaton(const Msca& automaton, const std::filesystem::path& path);

// Graphviz view: final states get doubled borders, the initial state an
// incoming arrow from a point, edges carry "(e1,...,en)" plus the modality
// mark (box for necessary, diamond for permitted).
std::string to_dot(const Msca& automaton);

// An absent controller renders as a single EMPTY node.
std::string to_dot(const std::optional<Msca>& controller);

// The five hotel-booking principals.
Msca client();
Msca privileged_client();
Msca broker();
Msca hotel();
Msca privileged_hotel();

// Same automaton under another flavor; revalidates.
Msca with_flavor(Msca automaton, Flavor flavor);

// Two clients book through a broker consulting two hotels, one of which
// insists on being booked. Orchestration flavor.
std::vector<Msca> booking_orchestration_operands();

// One privileged client who must query, a broker, and two interchangeable
// hotels. Choreography flavor.
std::vector<Msca> booking_choreography_operands();

} // namespace msca
