#include "msca/automaton.hpp"

#include <numeric>
#include <set>

namespace msca {

ValidationError::ValidationError(std::vector<std::string> violations_in)
    : Error(violations_in.empty()
                ? std::string("automaton is not well-formed")
                : std::accumulate(std::next(violations_in.begin()), violations_in.end(),
                                  violations_in.front(),
                                  [](std::string acc, const std::string& v) {
                                      return std::move(acc) + "; " + v;
                                  })),
      violations(std::move(violations_in)) {}

std::string StateVector::joined() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += parts[i];
    }
    return out;
}

namespace {

bool well_shaped_state(const StateVector& state, std::size_t rank) {
    if (state.rank() != rank) {
        return false;
    }
    for (const auto& part : state.parts) {
        if (part.empty()) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::string> validate(const Msca& a) {
    std::vector<std::string> out;
    if (a.rank == 0) {
        out.push_back("rank must be at least 1");
        return out;
    }

    for (const auto& q : a.states) {
        if (!well_shaped_state(q, a.rank)) {
            out.push_back("state (" + q.joined() + ") must have " +
                          std::to_string(a.rank) + " non-empty labels");
        }
    }
    if (!a.states.count(a.initial)) {
        out.push_back("initial state (" + a.initial.joined() + ") is not a state");
    }
    for (const auto& q : a.finals) {
        if (!a.states.count(q)) {
            out.push_back("final state (" + q.joined() + ") is not a state");
        }
    }

    for (const auto& t : a.transitions) {
        const std::string where =
            "transition (" + t.from.joined() + ") " + t.label.encode() + " (" + t.to.joined() + ")";
        if (!a.states.count(t.from)) {
            out.push_back(where + ": source is not a state");
        }
        if (!a.states.count(t.to)) {
            out.push_back(where + ": target is not a state");
        }
        if (t.label.rank() != a.rank) {
            out.push_back(where + ": label must have " + std::to_string(a.rank) + " elements");
            continue;
        }
        auto kind = classify(t.label);
        if (!kind) {
            out.push_back(where + ": label is not a request, an offer, or a match");
            continue;
        }
        if (t.from.rank() == a.rank && t.to.rank() == a.rank) {
            for (std::size_t i = 0; i < a.rank; ++i) {
                if (t.label[i].is_idle() && t.from[i] != t.to[i]) {
                    out.push_back(where + ": principal " + std::to_string(i) +
                                  " moves on an idle label element");
                }
            }
        }
        if (t.necessary()) {
            const bool ok = a.flavor == Flavor::Orchestration
                                ? (*kind == ActionKind::Request || *kind == ActionKind::Match)
                                : (*kind == ActionKind::Offer || *kind == ActionKind::Match);
            if (!ok) {
                out.push_back(where + (a.flavor == Flavor::Orchestration
                                           ? ": a necessary label must be a request or a match"
                                           : ": a necessary label must be an offer or a match"));
            }
        } else {
            // Permitted and necessary partition the transitions; the same
            // triple cannot sit in both classes.
            Transition twin = t;
            twin.modality = Modality::Necessary;
            if (a.transitions.count(twin)) {
                out.push_back(where + ": both permitted and necessary");
            }
        }
    }

    if (a.rank == 1) {
        // A principal never both requests and offers the same action.
        std::set<std::string> requested;
        std::set<std::string> offered;
        for (const auto& t : a.transitions) {
            if (t.label.rank() != 1) {
                continue;
            }
            if (t.label[0].is_request()) {
                requested.insert(t.label[0].name());
            } else if (t.label[0].is_offer()) {
                offered.insert(t.label[0].name());
            }
        }
        for (const auto& name : requested) {
            if (offered.count(name)) {
                out.push_back("principal both requests and offers '" + name + "'");
            }
        }
    }

    return out;
}

void validate_or_throw(const Msca& a) {
    auto violations = validate(a);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
}

} // namespace msca
