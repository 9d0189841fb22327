#include <doctest.h>

#include <msca/analysis.hpp>
#include <msca/compose.hpp>
#include <msca/errors.hpp>
#include <msca/io.hpp>

#include "helpers.hpp"

using namespace msca;
using helpers::edge;
using helpers::NEC;

TEST_CASE("composing a single contract returns it unchanged") {
    CHECK(compose({client()}) == client());
    CHECK(compose({privileged_client()}) == privileged_client());
}

TEST_CASE("an empty operand list is rejected") {
    CHECK_THROWS_AS(compose({}), EmptyOperandListError);
}

TEST_CASE("operands must share a flavor") {
    CHECK_THROWS_AS(compose({client(), privileged_client()}), MixedFlavorError);
}

TEST_CASE("two principals synchronize on complementary actions") {
    const Msca product = compose({helpers::needy(), helpers::helpful()});

    CHECK(product.name == "P1+P2");
    CHECK(product.rank == 2);
    CHECK(product.initial == StateVector{"p0", "q0"});
    CHECK(product.states ==
          StateSet{StateVector{"p0", "q0"}, StateVector{"p0", "q2"}, StateVector{"p1", "q1"},
                   StateVector{"p1", "q3"}});
    CHECK(product.finals == StateSet{StateVector{"p1", "q1"}, StateVector{"p1", "q3"}});

    // The ready pair fuses into a match — necessary because the requester's
    // side is — while the unmatched offer !b interleaves alone.
    CHECK(product.transitions ==
          std::set<Transition>{edge({"p0", "q0"}, {"?a", "!a"}, {"p1", "q1"}, NEC),
                               edge({"p0", "q0"}, {"-", "!b"}, {"p0", "q2"}),
                               edge({"p0", "q2"}, {"?a", "!a"}, {"p1", "q3"}, NEC)});
}

TEST_CASE("a lone move is suppressed while a partner is ready") {
    const Msca product = compose({helpers::needy(), helpers::helpful()});
    for (const Transition& t : product.transitions) {
        // Neither half of the ready (?a, !a) pair may fire alone.
        CHECK(t.label != ActionVector{BasicAction::request("a"), BasicAction::idle()});
        CHECK(t.label != ActionVector{BasicAction::idle(), BasicAction::offer("a")});
    }
}

TEST_CASE("only combinations reachable from the joint start are kept") {
    // p1 pairs with q0 or q2 in the full grid, but no run gets there.
    const Msca product = compose({helpers::needy(), helpers::helpful()});
    CHECK(product.states.size() == 4);
    CHECK(!product.states.count(StateVector{"p1", "q0"}));
    CHECK(!product.states.count(StateVector{"p1", "q2"}));
    CHECK(!product.states.count(StateVector{"p0", "q1"}));
    CHECK(!product.states.count(StateVector{"p0", "q3"}));
}

TEST_CASE("ranks add up across operands") {
    const Msca pair = compose({helpers::needy(), helpers::helpful()});
    CHECK(pair.rank == 2);
    CHECK(compose({pair, client()}).rank == 3);
    CHECK(compose(booking_orchestration_operands()).rank == 5);
}

TEST_CASE("composition is deterministic") {
    CHECK(compose(booking_choreography_operands()) == compose(booking_choreography_operands()));
}

TEST_CASE("composition is not associative") {
    const Msca a = helpers::rank1("A", Flavor::Orchestration, "a0", {"a1"}, {{"a0", "?x", "a1"}});
    const Msca b = helpers::rank1("B", Flavor::Orchestration, "b0", {"b1"}, {{"b0", "!x", "b1"}});
    const Msca c = helpers::rank1("C", Flavor::Orchestration, "c0", {"c1"}, {{"c0", "?x", "c1"}});

    const Msca flat = compose({a, b, c});
    const Msca nested = compose({compose({a, b}), c});

    // Flat composition lets B's offer pick either requester; once A+B are
    // fused, their match interleaves untouched and C can only move alone.
    CHECK(flat.transitions.count(edge({"a0", "b0", "c0"}, {"-", "!x", "?x"}, {"a0", "b1", "c1"})));
    CHECK(!nested.transitions.count(
        edge({"a0", "b0", "c0"}, {"-", "!x", "?x"}, {"a0", "b1", "c1"})));
    CHECK(nested.transitions.count(edge({"a0", "b0", "c0"}, {"-", "-", "?x"}, {"a0", "b0", "c1"})));
    CHECK(flat.transitions != nested.transitions);
}

TEST_CASE("a match turns necessary when either participant insists") {
    const Msca good = compose({helpers::alice_good(), helpers::bob_good(), helpers::carol_good()});
    CHECK(good.transitions.count(edge({"a0", "b0", "c0"}, {"!a", "?a", "-"}, {"a1", "b1", "c0"}, NEC)));
    CHECK(good.transitions.count(edge({"a0", "b0", "c0"}, {"!a", "-", "?a"}, {"a1", "b0", "c1"}, NEC)));
}

TEST_CASE("the booking composition has the published size") {
    const Msca a1 = compose(booking_orchestration_operands());
    CHECK(a1.states.size() == 2934);
    CHECK(a1.transitions.size() == 10437);
    CHECK(a1.finals.size() == 73);
    CHECK(a1.initial == StateVector{"c0", "c0", "b0", "h0", "h'0"});
    CHECK(a1.flavor == Flavor::Orchestration);

    const Msca a2 = compose(booking_choreography_operands());
    CHECK(a2.states.size() == 2934);
    CHECK(a2.transitions.size() == 10437);
    CHECK(a2.initial == StateVector{"c0", "c'0", "b0", "h0", "h0"});
    CHECK(a2.flavor == Flavor::Choreography);
    CHECK(validate(a2).empty());
}
