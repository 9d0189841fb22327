#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <msca/automaton.hpp>

namespace helpers {

constexpr msca::Modality NEC = msca::Modality::Necessary;
constexpr msca::Modality PER = msca::Modality::Permitted;

struct Edge {
    const char* from;
    const char* action;
    const char* to;
    msca::Modality modality = PER;
};

// Rank-1 automaton from a flat edge list; states are collected from the
// edges, the initial state, and the finals.
inline msca::Msca rank1(std::string name, msca::Flavor flavor, const char* initial,
                        std::initializer_list<const char*> finals,
                        std::initializer_list<Edge> edges) {
    msca::Msca a;
    a.name = std::move(name);
    a.rank = 1;
    a.flavor = flavor;
    a.initial = msca::StateVector{initial};
    a.states.insert(a.initial);
    for (const char* q : finals) {
        a.finals.insert(msca::StateVector{q});
        a.states.insert(msca::StateVector{q});
    }
    for (const Edge& e : edges) {
        a.states.insert(msca::StateVector{e.from});
        a.states.insert(msca::StateVector{e.to});
        a.transitions.insert({msca::StateVector{e.from},
                              msca::ActionVector{msca::BasicAction::decode(e.action)},
                              msca::StateVector{e.to}, e.modality});
    }
    msca::validate_or_throw(a);
    return a;
}

// Rank-n transition from encoded action strings.
inline msca::Transition edge(std::initializer_list<const char*> from,
                             std::initializer_list<const char*> label,
                             std::initializer_list<const char*> to,
                             msca::Modality modality = PER) {
    std::vector<msca::BasicAction> parts;
    parts.reserve(label.size());
    for (const char* e : label) {
        parts.push_back(msca::BasicAction::decode(e));
    }
    return {msca::StateVector(std::vector<std::string>(from.begin(), from.end())),
            msca::ActionVector(std::move(parts)),
            msca::StateVector(std::vector<std::string>(to.begin(), to.end())), modality};
}

// One principal that must have its request answered, and one that can answer
// right away or only after an unrelated offer.
inline msca::Msca needy() {
    return rank1("P1", msca::Flavor::Orchestration, "p0", {"p1"}, {{"p0", "?a", "p1", NEC}});
}

inline msca::Msca helpful() {
    return rank1("P2", msca::Flavor::Orchestration, "q0", {"q1", "q3"},
                 {{"q0", "!a", "q1"}, {"q0", "!b", "q2"}, {"q2", "!a", "q3"}});
}

// Alice insists on offering a; only one of Bob and Carol can accept it and
// still finish.
inline msca::Msca alice_good() {
    return rank1("Alice", msca::Flavor::Choreography, "a0", {"a1"}, {{"a0", "!a", "a1", NEC}});
}

inline msca::Msca bob_good() {
    return rank1("Bob", msca::Flavor::Choreography, "b0", {"b1"}, {{"b0", "?a", "b1"}});
}

inline msca::Msca carol_good() {
    return rank1("Carol", msca::Flavor::Choreography, "c0", {"c0"}, {{"c0", "?a", "c1"}});
}

// Same cast, but now accepting a strands whoever takes it.
inline msca::Msca alice_bad() {
    return rank1("Alice", msca::Flavor::Choreography, "a0", {"a0", "a1"},
                 {{"a0", "!a", "a1", NEC}});
}

inline msca::Msca bob_bad() {
    return rank1("Bob", msca::Flavor::Choreography, "b0", {"b0"}, {{"b0", "?a", "b1"}});
}

inline msca::Msca carol_bad() {
    return rank1("Carol", msca::Flavor::Choreography, "c0", {"c0"}, {{"c0", "?a", "c1"}});
}

} // namespace helpers
