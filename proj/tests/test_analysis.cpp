#include <doctest.h>

#include <random>
#include <set>

#include <msca/action.hpp>
#include <msca/analysis.hpp>
#include <msca/compose.hpp>
#include <msca/errors.hpp>
#include <msca/io.hpp>
#include <msca/oracle.hpp>
#include <msca/synthesis.hpp>

#include "helpers.hpp"

using namespace msca;
using helpers::edge;

namespace {

StateSet reach(const Msca& a, const StateVector& start, bool matches_only, bool skip_requests) {
    StateSet seen{start};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Transition& t : a.transitions) {
            const auto kind = classify(t.label);
            if (matches_only && kind != ActionKind::Match) {
                continue;
            }
            if (skip_requests && kind == ActionKind::Request) {
                continue;
            }
            if (seen.count(t.from) && !seen.count(t.to)) {
                seen.insert(t.to);
                grew = true;
            }
        }
    }
    return seen;
}

bool hits_final(const Msca& a, const StateSet& from) {
    for (const StateVector& q : a.finals) {
        if (from.count(q)) {
            return true;
        }
    }
    return false;
}

// Path-by-path restatements of the four run properties.
bool plodding_admits_agreement(const Msca& a) {
    return hits_final(a, reach(a, a.initial, false, true));
}

bool plodding_admits_strong_agreement(const Msca& a) {
    return hits_final(a, reach(a, a.initial, true, false));
}

bool plodding_is_safe(const Msca& a) {
    const StateSet forward = reach(a, a.initial, false, false);
    for (const Transition& t : a.transitions) {
        if (classify(t.label) == ActionKind::Request && forward.count(t.from) &&
            hits_final(a, reach(a, t.to, false, false))) {
            return false;
        }
    }
    return true;
}

bool plodding_is_strongly_safe(const Msca& a) {
    const StateSet forward = reach(a, a.initial, false, false);
    for (const Transition& t : a.transitions) {
        if (classify(t.label) != ActionKind::Match && forward.count(t.from) &&
            hits_final(a, reach(a, t.to, false, false))) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("dangling finds unreachable and blocked states") {
    Msca a = helpers::rank1("Island", Flavor::Orchestration, "s0", {"s0", "s3"},
                            {{"s0", "!a", "s1"}, {"s3", "!a", "s0"}});
    // s1 never reaches a final state; s3 is never reached.
    CHECK(dangling(a) == StateSet{StateVector{"s1"}, StateVector{"s3"}});

    for (const Msca& fixture : booking_orchestration_operands()) {
        CHECK(dangling(fixture).empty());
    }
}

TEST_CASE("run properties on the bundled client") {
    const Msca c = client();
    // The empty run already is a (strong) agreement: c0 is final.
    CHECK(admits_agreement(c));
    CHECK(admits_strong_agreement(c));
    // But booking runs through the request ?bst.
    CHECK(!is_safe(c));
    CHECK(!is_strongly_safe(c));
}

TEST_CASE("a request off every accepting path does not spoil safety") {
    const Msca a = helpers::rank1("Detour", Flavor::Orchestration, "s0", {"s1"},
                                  {{"s0", "!a", "s1"}, {"s1", "?b", "s2"}});
    CHECK(is_safe(a));
    CHECK(!is_strongly_safe(a));
    CHECK(admits_agreement(a));
    CHECK(!admits_strong_agreement(a));
}

TEST_CASE("an automaton whose only accepting run is empty satisfies everything") {
    Msca lone;
    lone.name = "Lone";
    lone.rank = 1;
    lone.initial = StateVector{"s0"};
    lone.states = {StateVector{"s0"}};
    lone.finals = {StateVector{"s0"}};
    CHECK(admits_agreement(lone));
    CHECK(admits_strong_agreement(lone));
    CHECK(is_safe(lone));
    CHECK(is_strongly_safe(lone));
}

TEST_CASE("set-based analysis agrees with plodding path search") {
    std::mt19937_64 rng(4242);
    oracle::GeneratorOptions options;
    options.max_rank = 2;
    options.max_states = 8;
    options.max_transitions = 16;
    for (int i = 0; i < 150; ++i) {
        const Flavor flavor = i % 2 == 0 ? Flavor::Orchestration : Flavor::Choreography;
        const Msca a = oracle::random_automaton(rng, flavor, options);
        CAPTURE(i);
        CHECK(admits_agreement(a) == plodding_admits_agreement(a));
        CHECK(admits_strong_agreement(a) == plodding_admits_strong_agreement(a));
        CHECK(is_safe(a) == plodding_is_safe(a));
        CHECK(is_strongly_safe(a) == plodding_is_strongly_safe(a));
    }
}

TEST_CASE("branching violations need a bystander that cannot follow") {
    Msca a;
    a.name = "Branchy";
    a.rank = 2;
    a.flavor = Flavor::Choreography;
    a.initial = StateVector{"p", "q"};
    a.states = {StateVector{"p", "q"}, StateVector{"p", "r"}, StateVector{"d", "d"}};
    a.finals = a.states;
    const Transition offered = edge({"p", "q"}, {"!a", "?a"}, {"d", "d"});
    a.transitions.insert(offered);
    a.transitions.insert(edge({"d", "d"}, {"!b", "?b"}, {"p", "r"}));
    REQUIRE(validate(a).empty());

    // (p,r) shares the sender's local state p but cannot fire (!a, ?a).
    CHECK(branching_violations(a) == std::set<Transition>{offered});

    // Excluding the bystander dissolves the violation.
    CHECK(branching_violations(a, {StateVector{"p", "r"}}).empty());

    // So does a matching move of its own.
    Msca fixed = a;
    fixed.transitions.insert(edge({"p", "r"}, {"!a", "?a"}, {"d", "d"}));
    CHECK(branching_violations(fixed).empty());

    // A dangling bystander never counts.
    Msca dangles = a;
    dangles.finals = {StateVector{"d", "d"}};
    CHECK(branching_violations(dangles).empty());
}

TEST_CASE("the match-only booking composition breaks branching at the start") {
    Msca matches = compose(booking_choreography_operands());
    std::set<Transition> kept;
    for (const Transition& t : matches.transitions) {
        if (classify(t.label) == ActionKind::Match) {
            kept.insert(t);
        }
    }
    matches.transitions = std::move(kept);

    const auto violations = branching_violations(matches);
    CHECK(violations.size() == 16);

    // The plain client's query match is allowed from the start, yet the state
    // where only the privileged client has moved cannot follow suit.
    bool found = false;
    for (const Transition& t : violations) {
        found = found || (t.from == StateVector{"c0", "c'0", "b0", "h0", "h0"} &&
                          t.label[0] == BasicAction::offer("qry"));
    }
    CHECK(found);
}

TEST_CASE("sub-automaton comparison is inclusion plus the same start") {
    const Msca whole = compose({helpers::needy(), helpers::helpful()});

    Msca part = whole;
    part.states.erase(StateVector{"p1", "q3"});
    part.finals.erase(StateVector{"p1", "q3"});
    part.transitions.erase(edge({"p0", "q2"}, {"?a", "!a"}, {"p1", "q3"}, helpers::NEC));
    CHECK(is_sub_automaton(part, whole));
    CHECK(!is_sub_automaton(whole, part));
    CHECK(is_sub_automaton(whole, whole));

    // A flipped modality only passes when modalities are ignored.
    Msca flipped = part;
    flipped.transitions.clear();
    for (Transition t : part.transitions) {
        if (classify(t.label) == ActionKind::Match) {
            t.modality = Modality::Permitted;
        }
        flipped.transitions.insert(t);
    }
    CHECK(!is_sub_automaton(flipped, whole));
    CHECK(is_sub_automaton(flipped, whole, true));

    CHECK_THROWS_AS(is_sub_automaton(client(), whole), RankMismatchError);
}
