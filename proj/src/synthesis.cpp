#include "msca/synthesis.hpp"

#include <memory>
#include <set>
#include <tuple>

#include "msca/analysis.hpp"

namespace msca {

SynthesisResult abstract_synthesize(const SynthesisInput& input) {
    const Msca& a = input.automaton;
    {
        auto violations = validate(a);
        if (!violations.empty()) {
            throw InvalidInputError(std::string("synthesis input: ") +
                                    ValidationError(violations).what());
        }
        for (const auto& q : input.forbidden) {
            if (!a.states.count(q)) {
                throw InvalidInputError("forbidden state (" + q.joined() + ") is not a state");
            }
        }
    }

    std::vector<const Transition*> original_necessary;
    for (const auto& t : a.transitions) {
        if (t.necessary()) {
            original_necessary.push_back(&t);
        }
    }

    SynthesisResult result;
    Msca k = a;
    StateSet r = dangling(k);
    StateSet dangling_k = r;
    result.trace.emplace_back(k.transitions.size(), r.size());

    const std::size_t budget = a.transitions.size() + a.states.size() + 1;
    for (;;) {
        if (result.iterations > budget) {
            throw NonMonotonePredicateError("no fixed point within |T| + |Q| + 1 iterations");
        }
        ++result.iterations;

        const IterationPredicates phi = input.predicates.bind(k, r, dangling_k);

        std::set<Transition> kept;
        for (const auto& t : k.transitions) {
            if (!phi.phi_p(t)) {
                kept.insert(t);
            }
        }
        StateSet r_next = r;
        for (const Transition* t : original_necessary) {
            if (!r_next.count(t->from) && phi.phi_f(*t)) {
                r_next.insert(t->from);
            }
        }
        const bool transitions_changed = kept.size() != k.transitions.size();
        k.transitions = std::move(kept);
        dangling_k = dangling(k);
        r_next.insert(dangling_k.begin(), dangling_k.end());

        const bool changed = transitions_changed || r_next.size() != r.size();
        r = std::move(r_next);
        result.trace.emplace_back(k.transitions.size(), r.size());
        if (!changed) {
            break;
        }
    }

    result.bad = r;
    if (r.count(a.initial)) {
        return result;
    }

    Msca out;
    out.name = a.name;
    out.rank = a.rank;
    out.flavor = a.flavor;
    out.initial = a.initial;
    for (const auto& q : a.states) {
        if (!r.count(q)) {
            out.states.insert(q);
        }
    }
    for (const auto& q : a.finals) {
        if (!r.count(q)) {
            out.finals.insert(q);
        }
    }
    for (const auto& t : k.transitions) {
        if (!r.count(t.from) && !r.count(t.to)) {
            out.transitions.insert(t);
        }
    }
    result.controller = std::move(out);
    return result;
}

PredicatePair mpc_predicates(StateSet forbidden) {
    PredicatePair pair;
    pair.bind = [forbidden = std::move(forbidden)](const Msca&, const StateSet& r,
                                                   const StateSet&) {
        IterationPredicates phi;
        phi.phi_p = [&r, &forbidden](const Transition& t) {
            return r.count(t.to) > 0 || forbidden.count(t.from) > 0;
        };
        phi.phi_f = [&r](const Transition& t) { return r.count(t.to) > 0; };
        return phi;
    };
    return pair;
}

PredicatePair orchestration_predicates() {
    PredicatePair pair;
    pair.bind = [](const Msca& k, const StateSet& r, const StateSet& dangling_k) {
        // Necessary matches still alive in K witness the controllability of a
        // necessary request: same requesting principal, same local state,
        // same action.
        auto witnesses = std::make_shared<
            std::set<std::tuple<std::size_t, std::string, std::string>>>();
        for (const auto& t : k.transitions) {
            if (!t.necessary() || classify(t.label) != ActionKind::Match) {
                continue;
            }
            if (dangling_k.count(t.from) || dangling_k.count(t.to)) {
                continue;
            }
            const std::size_t i = *request_index(t.label);
            witnesses->insert({i, t.from[i], t.label[i].name()});
        }
        IterationPredicates phi;
        phi.phi_p = [&r](const Transition& t) {
            return classify(t.label) == ActionKind::Request || r.count(t.to) > 0;
        };
        phi.phi_f = [witnesses](const Transition& t) {
            auto i = request_index(t.label);
            if (!i) {
                return false;
            }
            return witnesses->count({*i, t.from[*i], t.label[*i].name()}) == 0;
        };
        return phi;
    };
    return pair;
}

PredicatePair choreography_predicates(TieBreak tie_break) {
    PredicatePair pair;
    pair.bind = [tie_break](const Msca& k, const StateSet& r, const StateSet&) {
        // At most one branching violation is pruned per iteration; pruning
        // them wholesale could tear down choreographies that one pruning
        // (plus the dangling cascade) would have repaired.
        auto violations = branching_violations(k, r);
        std::shared_ptr<const Transition> selected;
        if (!violations.empty()) {
            selected = std::make_shared<Transition>(
                tie_break == TieBreak::LexMin ? *violations.begin() : *violations.rbegin());
        }

        IterationPredicates phi;
        phi.phi_p = [&r, selected](const Transition& t) {
            auto kind = classify(t.label);
            if (kind == ActionKind::Request || kind == ActionKind::Offer) {
                return true;
            }
            if (r.count(t.to)) {
                return true;
            }
            return selected && t == *selected;
        };

        // Necessary matches witness a necessary offer (or match) of the same
        // principal from the same source state. Witnesses are read off the
        // automaton as it will look once this iteration's pruning lands: a
        // transition turns uncontrollable in the very iteration that removes
        // its last witness, and detecting that one iteration later would let
        // a differently timed bad set steer the tie-break elsewhere.
        Msca pruned = k;
        pruned.transitions.clear();
        for (const auto& t : k.transitions) {
            if (!phi.phi_p(t)) {
                pruned.transitions.insert(t);
            }
        }
        const StateSet dangling_pruned = dangling(pruned);
        auto witnesses = std::make_shared<
            std::set<std::tuple<StateVector, std::size_t, std::string>>>();
        for (const auto& t : pruned.transitions) {
            if (!t.necessary() || classify(t.label) != ActionKind::Match) {
                continue;
            }
            if (dangling_pruned.count(t.from) || dangling_pruned.count(t.to)) {
                continue;
            }
            const std::size_t j = *snd(t.label);
            witnesses->insert({t.from, j, t.label[j].name()});
        }
        phi.phi_f = [witnesses](const Transition& t) {
            auto j = snd(t.label);
            if (!j) {
                return false;
            }
            return witnesses->count({t.from, *j, t.label[*j].name()}) == 0;
        };
        return phi;
    };
    return pair;
}

namespace {

SynthesisInput prepare_mpc(const Msca& a, bool against_offers) {
    validate_or_throw(a);
    Msca pruned = a;
    pruned.transitions.clear();
    StateSet forbidden;
    for (const auto& t : a.transitions) {
        auto kind = classify(t.label);
        const bool targeted =
            kind == ActionKind::Request || (against_offers && kind == ActionKind::Offer);
        if (!targeted) {
            pruned.transitions.insert(t);
        } else if (t.necessary()) {
            pruned.transitions.insert(t);
            forbidden.insert(t.from);
        }
    }
    SynthesisInput input;
    input.automaton = std::move(pruned);
    input.predicates = mpc_predicates(forbidden);
    input.forbidden = std::move(forbidden);
    return input;
}

} // namespace

SynthesisInput prepare_agreement(const Msca& a) {
    if (a.flavor != Flavor::Orchestration) {
        throw FlavorMismatchError("agreement preparation expects orchestration flavor");
    }
    return prepare_mpc(a, false);
}

SynthesisInput prepare_strong_agreement(const Msca& a) {
    return prepare_mpc(a, true);
}

SynthesisResult mpc(const Msca& a, const MpcProperty& property) {
    if (std::holds_alternative<Agreement>(property)) {
        return abstract_synthesize(prepare_agreement(a));
    }
    if (std::holds_alternative<StrongAgreement>(property)) {
        return abstract_synthesize(prepare_strong_agreement(a));
    }
    validate_or_throw(a);
    const auto& forbidden = std::get<ExplicitForbidden>(property).states;
    SynthesisInput input{a, forbidden, mpc_predicates(forbidden)};
    return abstract_synthesize(input);
}

SynthesisResult orchestration(const Msca& a) {
    if (a.flavor != Flavor::Orchestration) {
        throw FlavorMismatchError("orchestration synthesis expects orchestration flavor");
    }
    SynthesisInput input{a, {}, orchestration_predicates()};
    return abstract_synthesize(input);
}

SynthesisResult choreography(const Msca& a, TieBreak tie_break) {
    if (a.flavor != Flavor::Choreography) {
        throw FlavorMismatchError("choreography synthesis expects choreography flavor");
    }
    SynthesisInput input{a, {}, choreography_predicates(tie_break)};
    SynthesisResult result = abstract_synthesize(input);
    if (result.controller && !branching_violations(*result.controller).empty()) {
        throw Error("choreography fixed point still has branching violations");
    }
    return result;
}

} // namespace msca
