#include <doctest.h>

#include <msca/action.hpp>
#include <msca/errors.hpp>

using namespace msca;

TEST_CASE("basic actions encode and decode") {
    CHECK(BasicAction::idle().encode() == "-");
    CHECK(BasicAction::request("qry").encode() == "?qry");
    CHECK(BasicAction::offer("qry").encode() == "!qry");

    for (const char* text : {"-", "?a", "!a", "?bst", "!nbk"}) {
        CHECK(BasicAction::decode(text).encode() == text);
    }

    CHECK_THROWS_AS(BasicAction::decode(""), InvalidActionError);
    CHECK_THROWS_AS(BasicAction::decode("a"), InvalidActionError);
    CHECK_THROWS_AS(BasicAction::decode("?"), InvalidActionError);
    CHECK_THROWS_AS(BasicAction::decode("!"), InvalidActionError);
    CHECK_THROWS_AS(BasicAction::request(""), InvalidActionError);
    CHECK_THROWS_AS(BasicAction::offer(""), InvalidActionError);
}

TEST_CASE("the complement swaps requests and offers and fixes idle") {
    CHECK(co(BasicAction::request("a")) == BasicAction::offer("a"));
    CHECK(co(BasicAction::offer("a")) == BasicAction::request("a"));
    CHECK(co(BasicAction::idle()) == BasicAction::idle());

    for (const char* text : {"-", "?a", "!a", "?b"}) {
        const BasicAction action = BasicAction::decode(text);
        CHECK(co(co(action)) == action);
    }
}

TEST_CASE("actions order as offer, idle, request") {
    CHECK(BasicAction::offer("a") < BasicAction::idle());
    CHECK(BasicAction::idle() < BasicAction::request("a"));
    CHECK(BasicAction::offer("a") < BasicAction::request("a"));
    CHECK(BasicAction::offer("a") < BasicAction::offer("b"));
    CHECK(BasicAction::request("a") < BasicAction::request("b"));
}

TEST_CASE("action vectors encode as a parenthesized tuple") {
    const ActionVector label{BasicAction::request("a"), BasicAction::idle(),
                             BasicAction::offer("a")};
    CHECK(label.encode() == "(?a,-,!a)");
    CHECK(label.rank() == 3);
    CHECK(ActionVector{}.encode() == "()");
}

TEST_CASE("labels classify into requests, offers, and matches") {
    const ActionVector request{BasicAction::request("a"), BasicAction::idle()};
    const ActionVector offer{BasicAction::idle(), BasicAction::offer("a")};
    const ActionVector match{BasicAction::request("a"), BasicAction::offer("a")};

    CHECK(classify(request) == ActionKind::Request);
    CHECK(classify(offer) == ActionKind::Offer);
    CHECK(classify(match) == ActionKind::Match);
    CHECK(classify_strict(match) == ActionKind::Match);

    // Mismatched names, double roles, or an all-idle vector are not labels.
    CHECK(!classify(ActionVector{BasicAction::request("a"), BasicAction::offer("b")}));
    CHECK(!classify(ActionVector{BasicAction::request("a"), BasicAction::request("a")}));
    CHECK(!classify(ActionVector{BasicAction::offer("a"), BasicAction::offer("a")}));
    CHECK(!classify(ActionVector{BasicAction::idle(), BasicAction::idle()}));
    CHECK(!classify(ActionVector{}));
    CHECK_THROWS_AS(classify_strict(ActionVector{BasicAction::idle()}), InvalidActionError);
}

TEST_CASE("snd and request_index find the acting principals") {
    const ActionVector match{BasicAction::request("a"), BasicAction::idle(),
                             BasicAction::offer("a")};
    CHECK(snd(match) == 2);
    CHECK(request_index(match) == 0);

    const ActionVector offer{BasicAction::idle(), BasicAction::offer("a")};
    CHECK(snd(offer) == 1);
    CHECK(!request_index(offer));

    const ActionVector request{BasicAction::request("a"), BasicAction::idle()};
    CHECK(!snd(request));
    CHECK(request_index(request) == 0);

    const ActionVector garbage{BasicAction::idle(), BasicAction::idle()};
    CHECK(!snd(garbage));
    CHECK(!request_index(garbage));
}
