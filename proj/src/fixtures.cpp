#include "msca/io.hpp"

namespace msca {

namespace {

// Rank-1 building helper: transitions given as (from, action, to, modality).
struct Edge {
    const char* from;
    const char* action;
    const char* to;
    Modality modality = Modality::Permitted;
};

Msca principal(std::string name, Flavor flavor, const char* initial,
               std::initializer_list<const char*> finals, std::initializer_list<Edge> edges) {
    Msca a;
    a.name = std::move(name);
    a.rank = 1;
    a.flavor = flavor;
    a.initial = StateVector{initial};
    for (const char* q : finals) {
        a.finals.insert(StateVector{q});
    }
    for (const Edge& e : edges) {
        a.states.insert(StateVector{e.from});
        a.states.insert(StateVector{e.to});
        a.transitions.insert({StateVector{e.from},
                              ActionVector{BasicAction::decode(e.action)},
                              StateVector{e.to}, e.modality});
    }
    a.states.insert(a.initial);
    for (const auto& q : a.finals) {
        a.states.insert(q);
    }
    validate_or_throw(a);
    return a;
}

constexpr Modality NEC = Modality::Necessary;

} // namespace

Msca client() {
    return principal("Client", Flavor::Orchestration, "c0", {"c0", "c3", "c4"},
                     {
                         {"c0", "!qry", "c1"},
                         {"c1", "?bst", "c2"},
                         {"c2", "!ok", "c3"},
                         {"c2", "!nok", "c4"},
                     });
}

Msca privileged_client() {
    // The privileged client's query is non-negotiable, which only a
    // choreography can promise.
    return principal("PrivilegedClient", Flavor::Choreography, "c'0", {"c'0", "c'3", "c'4"},
                     {
                         {"c'0", "!qry", "c'1", NEC},
                         {"c'1", "?bst", "c'2"},
                         {"c'2", "!ok", "c'3"},
                         {"c'2", "!nok", "c'4"},
                     });
}

Msca broker() {
    return principal("Broker", Flavor::Orchestration, "b0", {"b0", "b9", "b12"},
                     {
                         {"b0", "?qry", "b1"},
                         {"b1", "!chk", "b2"},
                         {"b2", "?rsp", "b3"},
                         {"b3", "!chk", "b4"},
                         {"b4", "?rsp", "b5"},
                         {"b5", "!chk", "b4"},
                         {"b5", "!bst", "b6"},
                         {"b6", "?ok", "b7"},
                         {"b6", "?nok", "b10"},
                         {"b7", "!bk", "b8"},
                         {"b8", "!nbk", "b9"},
                         {"b9", "!nbk", "b9"},
                         {"b10", "!nbk", "b11"},
                         {"b11", "!nbk", "b12"},
                         {"b12", "!nbk", "b12"},
                     });
}

Msca hotel() {
    return principal("Hotel", Flavor::Orchestration, "h0", {"h0", "h3", "h4"},
                     {
                         {"h0", "?chk", "h1"},
                         {"h1", "!rsp", "h2"},
                         {"h2", "?bk", "h3"},
                         {"h2", "?nbk", "h4"},
                     });
}

Msca privileged_hotel() {
    return principal("PrivilegedHotel", Flavor::Orchestration, "h'0", {"h'0", "h'3", "h'4"},
                     {
                         {"h'0", "?chk", "h'1"},
                         {"h'1", "!rsp", "h'2"},
                         {"h'2", "?bk", "h'3", NEC},
                         {"h'2", "?nbk", "h'4"},
                     });
}

Msca with_flavor(Msca a, Flavor flavor) {
    a.flavor = flavor;
    validate_or_throw(a);
    return a;
}

std::vector<Msca> booking_orchestration_operands() {
    return {client(), client(), broker(), hotel(), privileged_hotel()};
}

std::vector<Msca> booking_choreography_operands() {
    return {with_flavor(client(), Flavor::Choreography), privileged_client(),
            with_flavor(broker(), Flavor::Choreography),
            with_flavor(hotel(), Flavor::Choreography),
            with_flavor(hotel(), Flavor::Choreography)};
}

} // namespace msca
