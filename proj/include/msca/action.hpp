#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace msca {

// One principal's contribution to a label: an offer "!a", a request "?a",
// or the idle placeholder "-".
class BasicAction {
public:
    // Declaration order fixes the canonical ordering of actions (and hence of
    // labels, transitions and tie-break choices): "!a" < "-" < "?a".
    enum class Kind { Offer, Idle, Request };

    BasicAction() = default;

    static BasicAction idle() { return {}; }
    static BasicAction request(std::string name);
    static BasicAction offer(std::string name);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    bool is_idle() const { return kind_ == Kind::Idle; }
    bool is_request() const { return kind_ == Kind::Request; }
    bool is_offer() const { return kind_ == Kind::Offer; }

    // Textual form used throughout ("-", "?name", "!name").
    std::string encode() const;
    static BasicAction decode(const std::string& text);

    friend auto operator<=>(const BasicAction&, const BasicAction&) = default;

private:
    BasicAction(Kind kind, std::string name);

    Kind kind_ = Kind::Idle;
    std::string name_;
};

// Complement: swaps requests and offers, fixes idle. An involution.
BasicAction co(const BasicAction& action);

// What a well-formed label can be.
enum class ActionKind { Request, Offer, Match };

// A label of a rank-n automaton: one basic action per principal.
class ActionVector {
public:
    ActionVector() = default;
    explicit ActionVector(std::vector<BasicAction> parts) : parts_(std::move(parts)) {}
    ActionVector(std::initializer_list<BasicAction> parts) : parts_(parts) {}

    std::size_t rank() const { return parts_.size(); }
    const BasicAction& operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<BasicAction>& parts() const { return parts_; }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    // "(e1,e2,...)" with encoded elements; diagnostics and DOT labels.
    std::string encode() const;

    friend auto operator<=>(const ActionVector&, const ActionVector&) = default;

private:
    std::vector<BasicAction> parts_;
};

// A request is exactly one request element, the rest idle; an offer is exactly
// one offer element, the rest idle; a match is one request plus the
// complementary offer, the rest idle. Everything else is rejected.
std::optional<ActionKind> classify(const ActionVector& label) noexcept;

// Same, but throws InvalidActionError instead of returning nothing.
ActionKind classify_strict(const ActionVector& label);

// Index of the offering element of an offer or match label.
std::optional<std::size_t> snd(const ActionVector& label) noexcept;

// Index of the requesting element of a request or match label.
std::optional<std::size_t> request_index(const ActionVector& label) noexcept;

} // namespace msca
