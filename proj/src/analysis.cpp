#include "msca/analysis.hpp"

#include <deque>
#include <map>
#include <tuple>

namespace msca {

namespace {

using Adjacency = std::map<StateVector, std::vector<const Transition*>>;

// allow == nullptr means every transition may be used.
StateSet closure(const StateSet& seeds, const Adjacency& step,
                 bool (*allow)(const Transition&)) {
    StateSet seen = seeds;
    std::deque<const StateVector*> frontier;
    for (const auto& q : seeds) {
        frontier.push_back(&q);
    }
    while (!frontier.empty()) {
        const StateVector* q = frontier.front();
        frontier.pop_front();
        auto it = step.find(*q);
        if (it == step.end()) {
            continue;
        }
        for (const Transition* t : it->second) {
            if (allow && !allow(*t)) {
                continue;
            }
            const StateVector& next = t->from == *q ? t->to : t->from;
            auto [pos, inserted] = seen.insert(next);
            if (inserted) {
                frontier.push_back(&*pos);
            }
        }
    }
    return seen;
}

Adjacency by_source(const Msca& a) {
    Adjacency out;
    for (const auto& t : a.transitions) {
        out[t.from].push_back(&t);
    }
    return out;
}

Adjacency by_target(const Msca& a) {
    Adjacency out;
    for (const auto& t : a.transitions) {
        out[t.to].push_back(&t);
    }
    return out;
}

bool non_request(const Transition& t) {
    return classify(t.label) != ActionKind::Request;
}

bool match_only(const Transition& t) {
    return classify(t.label) == ActionKind::Match;
}

bool admits(const Msca& a, bool (*allow)(const Transition&)) {
    const StateSet reached = closure({a.initial}, by_source(a), allow);
    for (const auto& q : a.finals) {
        if (reached.count(q)) {
            return true;
        }
    }
    return false;
}

bool safe_against(const Msca& a, bool (*harmless)(const Transition&)) {
    const StateSet reachable = closure({a.initial}, by_source(a), nullptr);
    const StateSet coreachable = closure(a.finals, by_target(a), nullptr);
    for (const auto& t : a.transitions) {
        if (!harmless(t) && reachable.count(t.from) && coreachable.count(t.to)) {
            return false;
        }
    }
    return true;
}

} // namespace

StateSet dangling(const Msca& a) {
    const StateSet reachable = closure({a.initial}, by_source(a), nullptr);
    const StateSet coreachable = closure(a.finals, by_target(a), nullptr);
    StateSet out;
    for (const auto& q : a.states) {
        if (!reachable.count(q) || !coreachable.count(q)) {
            out.insert(q);
        }
    }
    return out;
}

bool admits_agreement(const Msca& a) {
    return admits(a, non_request);
}

bool admits_strong_agreement(const Msca& a) {
    return admits(a, match_only);
}

bool is_safe(const Msca& a) {
    return safe_against(a, non_request);
}

bool is_strongly_safe(const Msca& a) {
    return safe_against(a, match_only);
}

std::set<Transition> branching_violations(const Msca& a, const StateSet& excluded) {
    StateSet considered;
    {
        const StateSet bad = dangling(a);
        for (const auto& q : a.states) {
            if (!bad.count(q) && !excluded.count(q)) {
                considered.insert(q);
            }
        }
    }

    // For a match with sender index j from q1, a witness against it is any
    // considered q2 with q2[j] == q1[j] that has no transition labelled the
    // same way. Counting states per (label, sender-local-state) makes the
    // existence test O(1) per transition.
    std::map<ActionVector, std::map<std::string, std::size_t>> with_label;
    std::map<ActionVector, StateSet> sources;
    for (const auto& t : a.transitions) {
        if (classify(t.label) != ActionKind::Match || !considered.count(t.from)) {
            continue;
        }
        if (sources[t.label].insert(t.from).second) {
            ++with_label[t.label][t.from[*snd(t.label)]];
        }
    }
    std::map<std::pair<std::size_t, std::string>, std::size_t> considered_at;
    for (const auto& q : considered) {
        for (std::size_t j = 0; j < q.rank(); ++j) {
            ++considered_at[{j, q[j]}];
        }
    }

    std::set<Transition> out;
    for (const auto& t : a.transitions) {
        auto kind = classify(t.label);
        if (kind != ActionKind::Match || !considered.count(t.from)) {
            continue;
        }
        const std::size_t j = *snd(t.label);
        const std::size_t agreeing = considered_at[{j, t.from[j]}];
        const std::size_t covered = with_label[t.label][t.from[j]];
        if (agreeing > covered) {
            out.insert(t);
        }
    }
    return out;
}

bool is_sub_automaton(const Msca& part, const Msca& whole, bool ignore_modality) {
    if (part.rank != whole.rank) {
        throw RankMismatchError("sub-automaton comparison needs equal ranks");
    }
    if (part.initial != whole.initial) {
        return false;
    }
    for (const auto& q : part.states) {
        if (!whole.states.count(q)) {
            return false;
        }
    }
    for (const auto& q : part.finals) {
        if (!whole.finals.count(q)) {
            return false;
        }
    }
    if (!ignore_modality) {
        for (const auto& t : part.transitions) {
            if (!whole.transitions.count(t)) {
                return false;
            }
        }
        return true;
    }
    std::set<std::tuple<StateVector, ActionVector, StateVector>> stripped;
    for (const auto& t : whole.transitions) {
        stripped.insert({t.from, t.label, t.to});
    }
    for (const auto& t : part.transitions) {
        if (!stripped.count({t.from, t.label, t.to})) {
            return false;
        }
    }
    return true;
}

} // namespace msca
