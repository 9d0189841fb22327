#include "msca/action.hpp"

#include "msca/errors.hpp"

namespace msca {

BasicAction::BasicAction(Kind kind, std::string name)
    : kind_(kind), name_(std::move(name)) {
    if (kind_ == Kind::Idle ? !name_.empty() : name_.empty()) {
        throw InvalidActionError("basic action name must be non-empty exactly when not idle");
    }
}

BasicAction BasicAction::request(std::string name) {
    return BasicAction(Kind::Request, std::move(name));
}

BasicAction BasicAction::offer(std::string name) {
    return BasicAction(Kind::Offer, std::move(name));
}

std::string BasicAction::encode() const {
    switch (kind_) {
    case Kind::Idle:
        return "-";
    case Kind::Request:
        return "?" + name_;
    case Kind::Offer:
        return "!" + name_;
    }
    return "-";
}

BasicAction BasicAction::decode(const std::string& text) {
    if (text == "-") {
        return idle();
    }
    if (text.size() >= 2 && text[0] == '?') {
        return request(text.substr(1));
    }
    if (text.size() >= 2 && text[0] == '!') {
        return offer(text.substr(1));
    }
    throw InvalidActionError("cannot decode basic action '" + text + "'");
}

BasicAction co(const BasicAction& action) {
    switch (action.kind()) {
    case BasicAction::Kind::Request:
        return BasicAction::offer(action.name());
    case BasicAction::Kind::Offer:
        return BasicAction::request(action.name());
    case BasicAction::Kind::Idle:
        return BasicAction::idle();
    }
    return BasicAction::idle();
}

std::string ActionVector::encode() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += parts_[i].encode();
    }
    out += ")";
    return out;
}

std::optional<ActionKind> classify(const ActionVector& label) noexcept {
    std::size_t requests = 0;
    std::size_t offers = 0;
    std::size_t request_at = 0;
    std::size_t offer_at = 0;
    for (std::size_t i = 0; i < label.rank(); ++i) {
        switch (label[i].kind()) {
        case BasicAction::Kind::Request:
            ++requests;
            request_at = i;
            break;
        case BasicAction::Kind::Offer:
            ++offers;
            offer_at = i;
            break;
        case BasicAction::Kind::Idle:
            break;
        }
    }
    if (requests == 1 && offers == 0) {
        return ActionKind::Request;
    }
    if (requests == 0 && offers == 1) {
        return ActionKind::Offer;
    }
    if (requests == 1 && offers == 1 &&
        label[request_at].name() == label[offer_at].name()) {
        return ActionKind::Match;
    }
    return std::nullopt;
}

ActionKind classify_strict(const ActionVector& label) {
    if (auto kind = classify(label)) {
        return *kind;
    }
    throw InvalidActionError("label " + label.encode() +
                             " is not a request, an offer, or a match");
}

std::optional<std::size_t> snd(const ActionVector& label) noexcept {
    auto kind = classify(label);
    if (kind != ActionKind::Offer && kind != ActionKind::Match) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < label.rank(); ++i) {
        if (label[i].is_offer()) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> request_index(const ActionVector& label) noexcept {
    auto kind = classify(label);
    if (kind != ActionKind::Request && kind != ActionKind::Match) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < label.rank(); ++i) {
        if (label[i].is_request()) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace msca
