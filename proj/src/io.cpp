#include "msca/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace msca {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json state_to_json(const StateVector& q) {
    return ordered_json(q.parts);
}

StateVector state_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) {
        throw ParseError(path + ": expected an array of state labels");
    }
    std::vector<std::string> parts;
    parts.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) {
            throw ParseError(path + "[" + std::to_string(i) + "]: expected a string");
        }
        parts.push_back(j[i].get<std::string>());
    }
    return StateVector(std::move(parts));
}

ActionVector label_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) {
        throw ParseError(path + ": expected an array of action elements");
    }
    std::vector<BasicAction> parts;
    parts.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string element_path = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_string()) {
            throw ParseError(element_path + ": expected a string");
        }
        try {
            parts.push_back(BasicAction::decode(j[i].get<std::string>()));
        } catch (const InvalidActionError& e) {
            throw ParseError(element_path + ": " + e.what());
        }
    }
    return ActionVector(std::move(parts));
}

const json& field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(path + ": missing field '" + key + "'");
    }
    return *it;
}

} // namespace

std::string to_json(const Msca& a) {
    ordered_json j;
    j["name"] = a.name;
    j["rank"] = a.rank;
    j["flavor"] = a.flavor == Flavor::Orchestration ? "orchestration" : "choreography";
    auto states = ordered_json::array();
    for (const auto& q : a.states) {
        states.push_back(state_to_json(q));
    }
    j["states"] = std::move(states);
    j["initial"] = state_to_json(a.initial);
    auto finals = ordered_json::array();
    for (const auto& q : a.finals) {
        finals.push_back(state_to_json(q));
    }
    j["finals"] = std::move(finals);
    auto transitions = ordered_json::array();
    for (const auto& t : a.transitions) {
        ordered_json jt;
        jt["from"] = state_to_json(t.from);
        auto label = ordered_json::array();
        for (const auto& element : t.label) {
            label.push_back(element.encode());
        }
        jt["label"] = std::move(label);
        jt["to"] = state_to_json(t.to);
        jt["modality"] = t.necessary() ? "necessary" : "permitted";
        transitions.push_back(std::move(jt));
    }
    j["transitions"] = std::move(transitions);
    return j.dump(2) + "\n";
}

Msca from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) {
        throw ParseError("$: expected a JSON object");
    }
    static const std::set<std::string> known{"name",   "rank",   "flavor",     "states",
                                            "initial", "finals", "transitions"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            throw ParseError("$: unknown field '" + key + "'");
        }
    }

    Msca a;
    const json& name = field(j, "name", "$");
    if (!name.is_string()) {
        throw ParseError("$.name: expected a string");
    }
    a.name = name.get<std::string>();

    const json& rank = field(j, "rank", "$");
    if (!rank.is_number_unsigned() || rank.get<std::size_t>() == 0) {
        throw ParseError("$.rank: expected a positive integer");
    }
    a.rank = rank.get<std::size_t>();

    const json& flavor = field(j, "flavor", "$");
    if (flavor == "orchestration") {
        a.flavor = Flavor::Orchestration;
    } else if (flavor == "choreography") {
        a.flavor = Flavor::Choreography;
    } else {
        throw ParseError("$.flavor: expected \"orchestration\" or \"choreography\"");
    }

    const json& states = field(j, "states", "$");
    if (!states.is_array()) {
        throw ParseError("$.states: expected an array");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        a.states.insert(state_from_json(states[i], "$.states[" + std::to_string(i) + "]"));
    }

    a.initial = state_from_json(field(j, "initial", "$"), "$.initial");

    const json& finals = field(j, "finals", "$");
    if (!finals.is_array()) {
        throw ParseError("$.finals: expected an array");
    }
    for (std::size_t i = 0; i < finals.size(); ++i) {
        a.finals.insert(state_from_json(finals[i], "$.finals[" + std::to_string(i) + "]"));
    }

    const json& transitions = field(j, "transitions", "$");
    if (!transitions.is_array()) {
        throw ParseError("$.transitions: expected an array");
    }
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const std::string path = "$.transitions[" + std::to_string(i) + "]";
        const json& jt = transitions[i];
        if (!jt.is_object()) {
            throw ParseError(path + ": expected an object");
        }
        for (const auto& [key, value] : jt.items()) {
            if (key != "from" && key != "label" && key != "to" && key != "modality") {
                throw ParseError(path + ": unknown field '" + key + "'");
            }
        }
        Transition t;
        t.from = state_from_json(field(jt, "from", path), path + ".from");
        t.label = label_from_json(field(jt, "label", path), path + ".label");
        t.to = state_from_json(field(jt, "to", path), path + ".to");
        const json& modality = field(jt, "modality", path);
        if (modality == "permitted") {
            t.modality = Modality::Permitted;
        } else if (modality == "necessary") {
            t.modality = Modality::Necessary;
        } else {
            throw ParseError(path + ".modality: expected \"permitted\" or \"necessary\"");
        }
        a.transitions.insert(std::move(t));
    }

    validate_or_throw(a);
    return a;
}

Msca load_automaton(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return from_json(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_automaton(const Msca& a, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << to_json(a);
}

namespace {

std::string dot_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string to_dot(const Msca& a) {
    std::ostringstream out;
    out << "digraph msca {\n"
        << "  rankdir=LR;\n"
        << "  node [shape=ellipse];\n"
        << "  __initial [shape=point, label=\"\"];\n";
    for (const auto& q : a.states) {
        out << "  " << dot_quote(q.joined());
        if (a.finals.count(q)) {
            out << " [peripheries=2]";
        }
        out << ";\n";
    }
    out << "  __initial -> " << dot_quote(a.initial.joined()) << ";\n";
    for (const auto& t : a.transitions) {
        out << "  " << dot_quote(t.from.joined()) << " -> " << dot_quote(t.to.joined())
            << " [label=" << dot_quote(t.label.encode() + (t.necessary() ? "□" : "◇"))
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const std::optional<Msca>& controller) {
    if (controller) {
        return to_dot(*controller);
    }
    return "digraph msca {\n  empty [shape=plaintext, label=\"EMPTY\"];\n}\n";
}

} // namespace msca
