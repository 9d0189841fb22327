#include "msca/oracle.hpp"

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "msca/action.hpp"
#include "msca/errors.hpp"

namespace msca::oracle {
namespace {

StateSet forward_reach(const Msca& a) {
    StateSet seen{a.initial};
    std::deque<StateVector> frontier{a.initial};
    while (!frontier.empty()) {
        const StateVector q = std::move(frontier.front());
        frontier.pop_front();
        for (const Transition& t : a.transitions) {
            if (t.from == q && !seen.count(t.to)) {
                seen.insert(t.to);
                frontier.push_back(t.to);
            }
        }
    }
    return seen;
}

StateSet backward_reach(const Msca& a) {
    StateSet seen;
    std::deque<StateVector> frontier;
    for (const StateVector& q : a.finals) {
        seen.insert(q);
        frontier.push_back(q);
    }
    while (!frontier.empty()) {
        const StateVector q = std::move(frontier.front());
        frontier.pop_front();
        for (const Transition& t : a.transitions) {
            if (t.to == q && !seen.count(t.from)) {
                seen.insert(t.from);
                frontier.push_back(t.from);
            }
        }
    }
    return seen;
}

StateSet dangling_of(const Msca& a) {
    const StateSet fwd = forward_reach(a);
    const StateSet bwd = backward_reach(a);
    StateSet out;
    for (const StateVector& q : a.states) {
        if (!fwd.count(q) || !bwd.count(q)) {
            out.insert(q);
        }
    }
    return out;
}

void check_input(const Msca& a, const StateSet& forbidden) {
    auto violations = validate(a);
    if (!violations.empty()) {
        throw InvalidInputError(std::string("synthesis input: ") +
                                ValidationError(violations).what());
    }
    for (const auto& q : forbidden) {
        if (!a.states.count(q)) {
            throw InvalidInputError("forbidden state (" + q.joined() + ") is not a state");
        }
    }
}

// A necessary request or match is controllable in k when some necessary match
// of k with non-dangling endpoints has the same principal, in the same local
// state, doing the same request.
bool orchestration_controllable(const Transition& t, const Msca& k, const StateSet& dangling_k) {
    const auto i = request_index(t.label);
    if (!i) {
        return true;
    }
    for (const Transition& w : k.transitions) {
        if (!w.necessary() || classify(w.label) != ActionKind::Match) {
            continue;
        }
        if (dangling_k.count(w.from) || dangling_k.count(w.to)) {
            continue;
        }
        if (w.from[*i] == t.from[*i] && w.label[*i] == t.label[*i]) {
            return true;
        }
    }
    return false;
}

// A necessary offer or match is controllable in k when some necessary match
// of k from the very same source state, with non-dangling endpoints, has the
// same principal doing the same offer.
bool choreography_controllable(const Transition& t, const Msca& k, const StateSet& dangling_k) {
    const auto i = snd(t.label);
    if (!i) {
        return true;
    }
    for (const Transition& w : k.transitions) {
        if (!w.necessary() || classify(w.label) != ActionKind::Match) {
            continue;
        }
        if (w.from != t.from) {
            continue;
        }
        if (dangling_k.count(w.from) || dangling_k.count(w.to)) {
            continue;
        }
        if (w.label[*i] == t.label[*i]) {
            return true;
        }
    }
    return false;
}

// Matches of k whose sender can, from some other considered state with the
// same local view, not take an identically labelled transition.
std::set<Transition> branching_violators(const Msca& k, const StateSet& excluded) {
    std::set<Transition> out;
    for (const Transition& t : k.transitions) {
        if (classify(t.label) != ActionKind::Match || excluded.count(t.from)) {
            continue;
        }
        const std::size_t j = *snd(t.label);
        for (const StateVector& q2 : k.states) {
            if (excluded.count(q2) || q2[j] != t.from[j]) {
                continue;
            }
            bool mirrored = false;
            for (const Transition& u : k.transitions) {
                if (u.from == q2 && u.label == t.label) {
                    mirrored = true;
                    break;
                }
            }
            if (!mirrored) {
                out.insert(t);
                break;
            }
        }
    }
    return out;
}

DirectResult package(const Msca& input, const Msca& k, StateSet r, std::size_t iterations) {
    DirectResult out;
    out.iterations = iterations;
    if (r.count(input.initial)) {
        out.bad = std::move(r);
        return out;
    }
    Msca c;
    c.name = input.name;
    c.rank = input.rank;
    c.flavor = input.flavor;
    c.initial = input.initial;
    for (const StateVector& q : input.states) {
        if (!r.count(q)) {
            c.states.insert(q);
        }
    }
    for (const StateVector& q : input.finals) {
        if (!r.count(q)) {
            c.finals.insert(q);
        }
    }
    for (const Transition& t : k.transitions) {
        if (!r.count(t.from) && !r.count(t.to)) {
            c.transitions.insert(t);
        }
    }
    out.controller = std::move(c);
    out.bad = std::move(r);
    return out;
}

} // namespace

DirectResult direct_mpc(const SynthesisInput& input) {
    const Msca& a = input.automaton;
    check_input(a, input.forbidden);

    Msca k = a;
    StateSet r = dangling_of(k);
    std::size_t iterations = 0;
    for (;;) {
        ++iterations;
        std::set<Transition> kept;
        for (const Transition& t : k.transitions) {
            if (!r.count(t.to) && !input.forbidden.count(t.from)) {
                kept.insert(t);
            }
        }
        StateSet r_next = r;
        for (const Transition& t : a.transitions) {
            if (t.necessary() && r.count(t.to)) {
                r_next.insert(t.from);
            }
        }
        const bool pruned = kept.size() != k.transitions.size();
        k.transitions = std::move(kept);
        for (const StateVector& q : dangling_of(k)) {
            r_next.insert(q);
        }
        const bool grown = r_next.size() != r.size();
        r = std::move(r_next);
        if (!pruned && !grown) {
            break;
        }
    }
    return package(a, k, std::move(r), iterations);
}

DirectResult direct_orchestration(const Msca& a) {
    if (a.flavor != Flavor::Orchestration) {
        throw FlavorMismatchError("orchestration synthesis expects orchestration flavor");
    }
    check_input(a, {});

    Msca k = a;
    StateSet r = dangling_of(k);
    std::size_t iterations = 0;
    for (;;) {
        ++iterations;
        std::set<Transition> kept;
        for (const Transition& t : k.transitions) {
            if (!r.count(t.to) && classify(t.label) != ActionKind::Request) {
                kept.insert(t);
            }
        }
        const bool pruned = kept.size() != k.transitions.size();
        k.transitions = std::move(kept);
        const StateSet dangling_k = dangling_of(k);
        StateSet r_next = r;
        for (const Transition& t : a.transitions) {
            if (t.necessary() && !orchestration_controllable(t, k, dangling_k)) {
                r_next.insert(t.from);
            }
        }
        r_next.insert(dangling_k.begin(), dangling_k.end());
        const bool grown = r_next.size() != r.size();
        r = std::move(r_next);
        if (!pruned && !grown) {
            break;
        }
    }
    return package(a, k, std::move(r), iterations);
}

DirectResult direct_choreography(const Msca& a, TieBreak tie_break) {
    if (a.flavor != Flavor::Choreography) {
        throw FlavorMismatchError("choreography synthesis expects choreography flavor");
    }
    check_input(a, {});

    Msca k = a;
    StateSet r = dangling_of(k);
    std::size_t iterations = 0;
    for (;;) {
        ++iterations;
        const std::set<Transition> violating = branching_violators(k, r);
        std::optional<Transition> selected;
        if (!violating.empty()) {
            selected = tie_break == TieBreak::LexMin ? *violating.begin() : *violating.rbegin();
        }

        std::set<Transition> kept;
        for (const Transition& t : k.transitions) {
            const auto kind = classify(t.label);
            if (kind == ActionKind::Request || kind == ActionKind::Offer) {
                continue;
            }
            if (r.count(t.to)) {
                continue;
            }
            if (selected && t == *selected) {
                continue;
            }
            kept.insert(t);
        }
        const bool pruned = kept.size() != k.transitions.size();
        k.transitions = std::move(kept);
        const StateSet dangling_k = dangling_of(k);
        StateSet r_next = r;
        for (const Transition& t : a.transitions) {
            if (t.necessary() && !choreography_controllable(t, k, dangling_k)) {
                r_next.insert(t.from);
            }
        }
        r_next.insert(dangling_k.begin(), dangling_k.end());
        const bool grown = r_next.size() != r.size();
        r = std::move(r_next);
        if (!pruned && !grown) {
            break;
        }
    }
    return package(a, k, std::move(r), iterations);
}

namespace {

Msca trim(const Msca& a) {
    const StateSet bad = dangling_of(a);
    Msca out = a;
    out.states.clear();
    out.finals.clear();
    out.transitions.clear();
    for (const StateVector& q : a.states) {
        if (!bad.count(q)) {
            out.states.insert(q);
        }
    }
    for (const StateVector& q : a.finals) {
        if (!bad.count(q)) {
            out.finals.insert(q);
        }
    }
    for (const Transition& t : a.transitions) {
        if (!bad.count(t.from) && !bad.count(t.to)) {
            out.transitions.insert(t);
        }
    }
    return out;
}

// candidate is trim already; the checks ask whether it is disqualified as a
// controller of the given kind over input.
bool violates_required(const Msca& candidate, const Msca& input, const StateSet& forbidden,
                       ControllerKind kind) {
    if (kind == ControllerKind::Mpc) {
        for (const StateVector& q : candidate.states) {
            if (forbidden.count(q)) {
                return true;
            }
        }
        for (const Transition& t : input.transitions) {
            if (t.necessary() && candidate.states.count(t.from) &&
                !candidate.transitions.count(t)) {
                return true;
            }
        }
        return false;
    }

    if (kind == ControllerKind::Orchestration) {
        for (const Transition& t : candidate.transitions) {
            if (classify(t.label) == ActionKind::Request) {
                return true;
            }
        }
        for (const Transition& t : input.transitions) {
            if (t.necessary() && candidate.states.count(t.from) &&
                !orchestration_controllable(t, candidate, {})) {
                return true;
            }
        }
        return false;
    }

    for (const Transition& t : candidate.transitions) {
        if (classify(t.label) != ActionKind::Match) {
            return true;
        }
    }
    if (!branching_violators(candidate, {}).empty()) {
        return true;
    }
    for (const Transition& t : input.transitions) {
        if (t.necessary() && candidate.states.count(t.from) &&
            !choreography_controllable(t, candidate, {})) {
            return true;
        }
    }
    return false;
}

// Non-blocking, keeps the probed transition alive, and passes the kind's
// property checks.
bool viable(const Msca& grown, const Msca& input, const StateSet& forbidden, ControllerKind kind,
            const Transition* probed) {
    const Msca trimmed = trim(grown);
    if (!trimmed.states.count(trimmed.initial)) {
        return false;
    }
    if (probed && !trimmed.transitions.count(*probed)) {
        return false;
    }
    return !violates_required(trimmed, input, forbidden, kind);
}

} // namespace

MaximalityReport maximality_check(const Msca& input, const StateSet& forbidden,
                                  const std::optional<Msca>& controller, ControllerKind kind) {
    if (input.transitions.size() > 200) {
        throw TooLargeError("maximality check is brute force; refusing " +
                            std::to_string(input.transitions.size()) + " transitions");
    }
    check_input(input, forbidden);

    Msca base;
    if (controller) {
        base = *controller;
    } else {
        base.name = input.name;
        base.rank = input.rank;
        base.flavor = input.flavor;
        base.initial = input.initial;
        base.states.insert(input.initial);
        if (input.finals.count(input.initial)) {
            base.finals.insert(input.initial);
        }
    }

    MaximalityReport report;
    if (!controller && viable(base, input, forbidden, kind, nullptr)) {
        report.ok = false;
        report.note = "empty result, but the bare initial state satisfies every required property";
        return report;
    }

    for (const Transition& t : input.transitions) {
        if (base.transitions.count(t)) {
            continue;
        }
        Msca grown = base;
        grown.states.insert(t.from);
        grown.states.insert(t.to);
        if (input.finals.count(t.from)) {
            grown.finals.insert(t.from);
        }
        if (input.finals.count(t.to)) {
            grown.finals.insert(t.to);
        }
        grown.transitions.insert(t);
        if (viable(grown, input, forbidden, kind, &t)) {
            report.ok = false;
            report.counterexample = t;
            report.note = "re-adding this transition still satisfies every required property";
            return report;
        }
    }
    return report;
}

Msca random_automaton(std::mt19937_64& rng, Flavor flavor, const GeneratorOptions& options) {
    auto pick = [&rng](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };

    const std::size_t rank = pick(1, std::max<std::size_t>(1, options.max_rank));
    const std::size_t state_budget = pick(1, std::max<std::size_t>(1, options.max_states));
    const std::size_t transition_budget = pick(0, options.max_transitions);

    const std::vector<std::string> locals{"s0", "s1", "s2", "s3"};
    auto random_local = [&] { return locals[pick(0, locals.size() - 1)]; };

    // Rank-1 automata draw requests and offers from disjoint pools so a
    // principal never requests and offers the same action.
    const std::vector<std::string> request_names =
        rank == 1 ? std::vector<std::string>{"a", "b"} : std::vector<std::string>{"a", "b", "c"};
    const std::vector<std::string> offer_names =
        rank == 1 ? std::vector<std::string>{"c", "d"} : std::vector<std::string>{"a", "b", "c"};

    Msca a;
    a.name = "random";
    a.rank = rank;
    a.flavor = flavor;
    {
        std::vector<std::string> init(rank);
        for (auto& part : init) {
            part = random_local();
        }
        a.initial = StateVector(std::move(init));
    }
    a.states.insert(a.initial);
    std::vector<StateVector> pool{a.initial};

    for (std::size_t n = 0; n < transition_budget; ++n) {
        const StateVector from = pool[pick(0, pool.size() - 1)];

        std::vector<BasicAction> parts(rank, BasicAction::idle());
        ActionKind kind;
        if (rank == 1) {
            kind = pick(0, 1) == 0 ? ActionKind::Request : ActionKind::Offer;
        } else {
            const std::size_t roll = pick(0, 2);
            kind = roll == 0   ? ActionKind::Request
                   : roll == 1 ? ActionKind::Offer
                               : ActionKind::Match;
        }
        if (kind == ActionKind::Request) {
            parts[pick(0, rank - 1)] =
                BasicAction::request(request_names[pick(0, request_names.size() - 1)]);
        } else if (kind == ActionKind::Offer) {
            parts[pick(0, rank - 1)] =
                BasicAction::offer(offer_names[pick(0, offer_names.size() - 1)]);
        } else {
            const std::size_t i = pick(0, rank - 1);
            std::size_t j = pick(0, rank - 2);
            if (j >= i) {
                ++j;
            }
            const std::string& name = offer_names[pick(0, offer_names.size() - 1)];
            parts[i] = BasicAction::request(name);
            parts[j] = BasicAction::offer(name);
        }
        const ActionVector label(std::move(parts));

        std::vector<std::string> to_parts(from.parts);
        for (std::size_t p = 0; p < rank; ++p) {
            if (!label[p].is_idle()) {
                to_parts[p] = random_local();
            }
        }
        StateVector to(std::move(to_parts));
        if (!a.states.count(to)) {
            if (a.states.size() >= state_budget) {
                // Redirect to some existing state that keeps idle principals
                // in place.
                std::vector<const StateVector*> candidates;
                for (const StateVector& q : pool) {
                    bool compatible = true;
                    for (std::size_t p = 0; p < rank; ++p) {
                        if (label[p].is_idle() && q[p] != from[p]) {
                            compatible = false;
                            break;
                        }
                    }
                    if (compatible) {
                        candidates.push_back(&q);
                    }
                }
                if (candidates.empty()) {
                    continue;
                }
                to = *candidates[pick(0, candidates.size() - 1)];
            } else {
                a.states.insert(to);
                pool.push_back(to);
            }
        }

        Modality modality = Modality::Permitted;
        const bool may_be_necessary =
            flavor == Flavor::Orchestration
                ? (kind == ActionKind::Request || kind == ActionKind::Match)
                : (kind == ActionKind::Offer || kind == ActionKind::Match);
        if (may_be_necessary && pick(0, 2) == 0) {
            modality = Modality::Necessary;
        }
        Transition t{from, label, to, modality};
        Transition twin = t;
        twin.modality = t.necessary() ? Modality::Permitted : Modality::Necessary;
        if (!a.transitions.count(twin)) {
            a.transitions.insert(std::move(t));
        }
    }

    for (const StateVector& q : pool) {
        if (pick(0, 2) == 0) {
            a.finals.insert(q);
        }
    }
    if (a.finals.empty()) {
        a.finals.insert(pool[pick(0, pool.size() - 1)]);
    }

    validate_or_throw(a);
    return a;
}

} // namespace msca::oracle
