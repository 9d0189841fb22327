#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <msca/analysis.hpp>
#include <msca/automaton.hpp>
#include <msca/compose.hpp>
#include <msca/errors.hpp>
#include <msca/io.hpp>
#include <msca/synthesis.hpp>

namespace {

// Bad flag combinations discovered only after CLI11 parsing.
struct UsageError : msca::Error {
    using msca::Error::Error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw msca::Error("cannot write " + out_path);
    }
    out << text;
}

// ";"-separated states, each a ","-joined vector of local state names.
msca::StateSet parse_forbidden(const std::string& text) {
    msca::StateSet states;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(';', begin);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string item = text.substr(begin, end - begin);
        begin = end + 1;
        if (item.empty()) {
            continue;
        }
        std::vector<std::string> parts;
        std::size_t from = 0;
        while (true) {
            const std::size_t comma = item.find(',', from);
            if (comma == std::string::npos) {
                parts.push_back(item.substr(from));
                break;
            }
            parts.push_back(item.substr(from, comma - from));
            from = comma + 1;
        }
        states.insert(msca::StateVector(std::move(parts)));
    }
    return states;
}

std::string format_transition(const msca::Transition& t) {
    return "(" + t.from.joined() + ") -" + t.label.encode() +
           (t.modality == msca::Modality::Necessary ? "□" : "◇") + "-> (" +
           t.to.joined() + ")";
}

std::string snake(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isupper(static_cast<unsigned char>(c))) {
            if (!out.empty()) {
                out += '_';
            }
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else {
            out += c;
        }
    }
    return out;
}

int run_compose(const std::vector<std::string>& inputs, const std::string& out_path) {
    std::vector<msca::Msca> operands;
    operands.reserve(inputs.size());
    for (const std::string& path : inputs) {
        operands.push_back(msca::load_automaton(path));
    }
    emit(msca::to_json(msca::compose(operands)), out_path);
    return 0;
}

int run_synth(const std::string& kind, const std::string& property, bool property_given,
              const std::string& forbidden, bool forbidden_given, const std::string& tiebreak,
              bool tiebreak_given, const std::string& input, const std::string& out_path) {
    if (kind != "mpc" && (property_given || forbidden_given)) {
        throw UsageError("--property/--forbidden only apply to --kind mpc");
    }
    if (kind != "choreography" && tiebreak_given) {
        throw UsageError("--tiebreak only applies to --kind choreography");
    }
    const msca::Msca automaton = msca::load_automaton(input);
    msca::SynthesisResult result;
    if (kind == "mpc") {
        msca::MpcProperty prop = msca::Agreement{};
        if (forbidden_given) {
            prop = msca::ExplicitForbidden{parse_forbidden(forbidden)};
        } else if (property == "strong-agreement") {
            prop = msca::StrongAgreement{};
        }
        result = msca::mpc(automaton, prop);
    } else if (kind == "orchestration") {
        result = msca::orchestration(automaton);
    } else {
        result = msca::choreography(automaton, tiebreak == "lexmax" ? msca::TieBreak::LexMax
                                                                    : msca::TieBreak::LexMin);
    }
    if (!result.controller) {
        std::cerr << "synthesis is empty: the initial state turned bad after "
                  << result.iterations << " iterations (" << result.bad.size()
                  << " bad states)\n";
        return 1;
    }
    emit(msca::to_json(*result.controller), out_path);
    return 0;
}

int run_check(bool safe, bool strongly_safe, bool agreement, bool strong_agreement,
              bool branching, const std::string& input) {
    const msca::Msca automaton = msca::load_automaton(input);
    if (branching) {
        for (const msca::Transition& t : msca::branching_violations(automaton)) {
            std::cout << format_transition(t) << "\n";
        }
        return 0;
    }
    bool value = false;
    if (safe) {
        value = msca::is_safe(automaton);
    } else if (strongly_safe) {
        value = msca::is_strongly_safe(automaton);
    } else if (agreement) {
        value = msca::admits_agreement(automaton);
    } else if (strong_agreement) {
        value = msca::admits_strong_agreement(automaton);
    }
    std::cout << (value ? "true" : "false") << "\n";
    return 0;
}

int run_info(const std::string& input) {
    const msca::Msca a = msca::load_automaton(input);
    std::cout << "name: " << a.name << "\n"
              << "rank: " << a.rank << "\n"
              << "states: " << a.states.size() << "\n"
              << "transitions: " << a.transitions.size() << "\n"
              << "finals: " << a.finals.size() << "\n"
              << "flavor: "
              << (a.flavor == msca::Flavor::Orchestration ? "orchestration" : "choreography")
              << "\n"
              << "initial: (" << a.initial.joined() << ")\n";
    return 0;
}

int run_export(const std::string& input, const std::string& out_path) {
    emit(msca::to_dot(msca::load_automaton(input)), out_path);
    return 0;
}

int run_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path root(dir);
    fs::create_directories(root);
    const auto write = [](const msca::Msca& a, const fs::path& path) {
        msca::save_automaton(a, path);
        std::cout << path.string() << "\n";
    };
    for (const msca::Msca& a : {msca::client(), msca::privileged_client(), msca::broker(),
                                msca::hotel(), msca::privileged_hotel()}) {
        write(a, root / (snake(a.name) + ".json"));
    }
    const auto write_operands = [&](const std::vector<msca::Msca>& operands,
                                    const std::string& subdir) {
        const fs::path where = root / subdir;
        fs::create_directories(where);
        for (std::size_t i = 0; i < operands.size(); ++i) {
            const std::string stem =
                (i < 9 ? "0" : "") + std::to_string(i + 1) + "_" + snake(operands[i].name);
            write(operands[i], where / (stem + ".json"));
        }
    };
    write_operands(msca::booking_orchestration_operands(), "booking_orchestration");
    write_operands(msca::booking_choreography_operands(), "booking_choreography");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modal service contract automata: composition, synthesis, analysis"};
    app.require_subcommand(1);

    auto* compose_cmd = app.add_subcommand("compose", "Compose two or more contract automata");
    std::string compose_out;
    std::vector<std::string> compose_inputs;
    compose_cmd->add_option("-o,--output", compose_out, "Output file (default: stdout)");
    compose_cmd->add_option("inputs", compose_inputs, "Operand automata, in order")->required();

    auto* synth_cmd = app.add_subcommand("synth", "Synthesize a controller");
    std::string synth_kind;
    std::string synth_property = "agreement";
    std::string synth_forbidden;
    std::string synth_tiebreak = "lexmin";
    std::string synth_out;
    std::string synth_input;
    synth_cmd->add_option("--kind", synth_kind, "Controller kind")
        ->required()
        ->check(CLI::IsMember({"mpc", "orchestration", "choreography"}));
    auto* property_opt =
        synth_cmd->add_option("--property", synth_property, "Property enforced by mpc")
            ->check(CLI::IsMember({"agreement", "strong-agreement"}));
    auto* forbidden_opt = synth_cmd->add_option(
        "--forbidden", synth_forbidden,
        "Forbidden states for mpc: \";\"-separated, each \",\"-joined local names");
    property_opt->excludes(forbidden_opt);
    synth_cmd->add_option("--tiebreak", synth_tiebreak, "Choreography branching tie-break")
        ->check(CLI::IsMember({"lexmin", "lexmax"}));
    synth_cmd->add_option("-o,--output", synth_out, "Output file (default: stdout)");
    synth_cmd->add_option("input", synth_input, "Automaton to control")->required();

    auto* check_cmd = app.add_subcommand("check", "Evaluate one property of an automaton");
    bool check_safe = false;
    bool check_strongly_safe = false;
    bool check_agreement = false;
    bool check_strong_agreement = false;
    bool check_branching = false;
    std::string check_input;
    auto* check_props = check_cmd->add_option_group("property")->require_option(1);
    check_props->add_flag("--safe", check_safe, "Every accepting run is an agreement");
    check_props->add_flag("--strongly-safe", check_strongly_safe,
                          "Every accepting run is a strong agreement");
    check_props->add_flag("--admits-agreement", check_agreement,
                          "Some accepting run is an agreement");
    check_props->add_flag("--admits-strong-agreement", check_strong_agreement,
                          "Some accepting run is a strong agreement");
    check_props->add_flag("--branching", check_branching,
                          "Print transitions violating the branching condition");
    check_cmd->add_option("input", check_input, "Automaton to check")->required();

    auto* info_cmd = app.add_subcommand("info", "Print size and shape of an automaton");
    std::string info_input;
    info_cmd->add_option("input", info_input, "Automaton to describe")->required();

    auto* export_cmd = app.add_subcommand("export", "Render an automaton");
    bool export_dot = false;
    std::string export_out;
    std::string export_input;
    export_cmd->add_option_group("format")
        ->require_option(1)
        ->add_flag("--dot", export_dot, "Graphviz dot");
    export_cmd->add_option("-o,--output", export_out, "Output file (default: stdout)");
    export_cmd->add_option("input", export_input, "Automaton to render")->required();

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the bundled example contracts");
    std::string fixtures_dir;
    fixtures_cmd->add_option("--dir", fixtures_dir, "Target directory")->required();

    int rc = 0;
    compose_cmd->callback([&] { rc = run_compose(compose_inputs, compose_out); });
    synth_cmd->callback([&] {
        rc = run_synth(synth_kind, synth_property, property_opt->count() > 0, synth_forbidden,
                       forbidden_opt->count() > 0, synth_tiebreak,
                       synth_cmd->count("--tiebreak") > 0, synth_input, synth_out);
    });
    check_cmd->callback([&] {
        rc = run_check(check_safe, check_strongly_safe, check_agreement, check_strong_agreement,
                       check_branching, check_input);
    });
    info_cmd->callback([&] { rc = run_info(info_input); });
    export_cmd->callback([&] { rc = run_export(export_input, export_out); });
    fixtures_cmd->callback([&] { rc = run_fixtures(fixtures_dir); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const msca::ValidationError& e) {
        std::cerr << "error: invalid automaton\n";
        for (const std::string& violation : e.violations) {
            std::cerr << "  " << violation << "\n";
        }
        return 2;
    } catch (const msca::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
