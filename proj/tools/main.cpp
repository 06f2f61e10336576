// bigsurf: bigness of -K, root systems and Zariski certificates for blow-ups
// of the plane and of Hirzebruch surfaces.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bigsurf/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bigsurf::DomainError("cannot open input file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact bigness, root-system and Zariski-decomposition checks for rational surfaces"};
    app.require_subcommand(1);

    std::string input_path;
    std::string inline_json;
    std::string format = "json";
    std::string out_path;
    bigsurf::cli::SweepBounds bounds;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"classify", "Decide bigness of -K for a point configuration"},
        {"check", "Cross-check the inequality verdict against the lattice criterion"},
        {"roots", "Extract and classify the root system (json, text or dot)"},
        {"zariski", "Zariski decomposition certificates for a hirzebruch_family"},
        {"enumerate", "List (-1)-classes and (-2)-roots of a del Pezzo lattice"},
        {"sweep", "Cross-validate every configuration within the bounds"},
        {"witness", "Verify a big + effective decomposition of a multiple of -K"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--format", format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--out", out_path, "Write the report to a file instead of stdout");
        if (name == "sweep") {
            sub->add_option("--max-a", bounds.max_a, "Largest line count for line_conic")->check(CLI::NonNegativeNumber);
            sub->add_option("--max-b", bounds.max_b, "Largest conic count for line_conic")->check(CLI::NonNegativeNumber);
            sub->add_option("--max-ai", bounds.max_ai, "Largest per-line count for three_lines")
                ->check(CLI::NonNegativeNumber);
        } else {
            auto* file = sub->add_option("--input", input_path, "Input JSON file");
            auto* json = sub->add_option("--json", inline_json, "Inline input JSON");
            file->excludes(json);
        }
    }

    CLI11_PARSE(app, argc, argv);

    bigsurf::cli::RunResult result;
    try {
        const auto command = bigsurf::cli::command_from_string(app.get_subcommands().front()->get_name());
        std::string text = inline_json;
        if (!input_path.empty()) text = read_file(input_path);
        std::optional<bigsurf::cli::SweepBounds> sweep;
        if (command == bigsurf::cli::Command::Sweep) sweep = bounds;
        const auto config =
            bigsurf::cli::parse_config(command, text, bigsurf::cli::format_from_string(format), sweep);
        result = bigsurf::cli::run(config);
    } catch (const bigsurf::DomainError& e) {
        result = {1, "", e.what()};
    }

    if (!result.output.empty()) {
        if (out_path.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return 1;
            }
            out << result.output;
        }
    }
    if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
    return result.exit_code;
}
