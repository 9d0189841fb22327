#include "msca/compose.hpp"

#include <deque>
#include <map>
#include <optional>

namespace msca {

namespace {

// The single non-idle element of a request or offer label, i.e. what the
// operand still wants matched. Match labels have nothing pending.
std::optional<BasicAction> pending(const ActionVector& label) {
    auto kind = classify(label);
    if (kind == ActionKind::Request || kind == ActionKind::Offer) {
        for (const auto& element : label) {
            if (!element.is_idle()) {
                return element;
            }
        }
    }
    return std::nullopt;
}

struct Enabled {
    const Transition* transition;
    std::optional<BasicAction> pending;
};

StateVector project(const StateVector& q, std::size_t offset, std::size_t rank) {
    return StateVector(std::vector<std::string>(q.parts.begin() + offset,
                                                q.parts.begin() + offset + rank));
}

void place(std::vector<std::string>& into, const StateVector& part, std::size_t offset) {
    for (std::size_t i = 0; i < part.rank(); ++i) {
        into[offset + i] = part[i];
    }
}

void place(std::vector<BasicAction>& into, const ActionVector& part, std::size_t offset) {
    for (std::size_t i = 0; i < part.rank(); ++i) {
        into[offset + i] = part[i];
    }
}

} // namespace

Msca compose(const std::vector<Msca>& operands) {
    if (operands.empty()) {
        throw EmptyOperandListError("compose needs at least one operand");
    }
    for (const auto& op : operands) {
        validate_or_throw(op);
        if (op.flavor != operands.front().flavor) {
            throw MixedFlavorError("compose operands must share one flavor");
        }
    }

    const std::size_t n = operands.size();
    std::vector<std::size_t> offset(n, 0);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        offset[i] = rank;
        rank += operands[i].rank;
    }

    // Operand transitions grouped by their source state.
    std::vector<std::map<StateVector, std::vector<const Transition*>>> adjacency(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& t : operands[i].transitions) {
            adjacency[i][t.from].push_back(&t);
        }
    }

    Msca out;
    out.rank = rank;
    out.flavor = operands.front().flavor;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            out.name += "+";
        }
        out.name += operands[i].name;
    }

    std::vector<std::string> initial_parts(rank);
    for (std::size_t i = 0; i < n; ++i) {
        place(initial_parts, operands[i].initial, offset[i]);
    }
    out.initial = StateVector(std::move(initial_parts));

    std::deque<StateVector> frontier{out.initial};
    out.states.insert(out.initial);

    auto emit = [&](Transition&& t) {
        if (!out.states.count(t.to)) {
            out.states.insert(t.to);
            frontier.push_back(t.to);
        }
        out.transitions.insert(std::move(t));
    };

    while (!frontier.empty()) {
        const StateVector q = frontier.front();
        frontier.pop_front();

        std::vector<std::vector<Enabled>> enabled(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto it = adjacency[i].find(project(q, offset[i], operands[i].rank));
            if (it == adjacency[i].end()) {
                continue;
            }
            for (const Transition* t : it->second) {
                enabled[i].push_back({t, pending(t->label)});
            }
        }

        // Matches between complementary pending elements of distinct operands.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (const auto& ei : enabled[i]) {
                    if (!ei.pending) {
                        continue;
                    }
                    const BasicAction wanted = co(*ei.pending);
                    for (const auto& ej : enabled[j]) {
                        if (!ej.pending || *ej.pending != wanted) {
                            continue;
                        }
                        std::vector<BasicAction> label(rank);
                        place(label, ei.transition->label, offset[i]);
                        place(label, ej.transition->label, offset[j]);
                        std::vector<std::string> target = q.parts;
                        place(target, ei.transition->to, offset[i]);
                        place(target, ej.transition->to, offset[j]);
                        const Modality modality =
                            ei.transition->necessary() || ej.transition->necessary()
                                ? Modality::Necessary
                                : Modality::Permitted;
                        emit({q, ActionVector(std::move(label)),
                              StateVector(std::move(target)), modality});
                    }
                }
            }
        }

        // Lone moves, unless some other operand could complete the element.
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& ei : enabled[i]) {
                bool forced = false;
                if (ei.pending) {
                    const BasicAction wanted = co(*ei.pending);
                    for (std::size_t j = 0; j < n && !forced; ++j) {
                        if (j == i) {
                            continue;
                        }
                        for (const auto& ej : enabled[j]) {
                            if (ej.pending && *ej.pending == wanted) {
                                forced = true;
                                break;
                            }
                        }
                    }
                }
                if (forced) {
                    continue;
                }
                std::vector<BasicAction> label(rank);
                place(label, ei.transition->label, offset[i]);
                std::vector<std::string> target = q.parts;
                place(target, ei.transition->to, offset[i]);
                emit({q, ActionVector(std::move(label)), StateVector(std::move(target)),
                      ei.transition->modality});
            }
        }
    }

    for (const auto& q : out.states) {
        bool all_final = true;
        for (std::size_t i = 0; i < n && all_final; ++i) {
            all_final = operands[i].finals.count(project(q, offset[i], operands[i].rank)) > 0;
        }
        if (all_final) {
            out.finals.insert(q);
        }
    }

    return out;
}

} // namespace msca
