// Command-line front end: `hkspread run <script|-> [options]`.
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hkspread/session.hpp"
#include "hkspread/version.hpp"

namespace {

using hkspread::kExitOk;
// Usage errors share the parse-error exit code.
constexpr int kExitUsage = hkspread::kExitParseError;

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert-Kunz and *-spread computations over prime fields"};
    app.set_version_flag("--version", hkspread::kVersion);
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Execute a session script");
    std::string script_path;
    std::string format = "json";
    std::string order = "degrevlex";
    std::optional<std::uint64_t> max_gb_steps;
    std::optional<std::uint32_t> max_exponent;
    bool no_timing = false;
    run->add_option("script", script_path, "Script file, or - for standard input")->required();
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--order", order, "Monomial order")->check(CLI::IsMember({"degrevlex", "lex", "deglex"}));
    run->add_option("--max-gb-steps", max_gb_steps, "Reduction step budget per Groebner computation")
        ->check(CLI::PositiveNumber);
    run->add_option("--max-exponent", max_exponent, "Largest exponent allowed in any monomial")
        ->check(CLI::PositiveNumber);
    run->add_flag("--no-timing", no_timing, "Omit the timing field from JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    hkspread::Config config;
    try {
        config.format = hkspread::output_format_from_string(format);
        config.order = hkspread::order_kind_from_string(order);
        hkspread::apply_environment(config);
    } catch (const hkspread::Error& e) {
        std::cerr << "hkspread: " << e.what() << "\n";
        return kExitUsage;
    }
    if (max_gb_steps) config.limits.max_gb_steps = *max_gb_steps;
    if (max_exponent) config.limits.max_exponent = *max_exponent;

    auto text = read_input(script_path);
    if (!text) {
        std::cerr << "hkspread: cannot read '" << script_path << "'\n";
        return kExitUsage;
    }

    auto out = hkspread::run_session(*text, config, !no_timing);
    std::cout << out.text;
    return out.exit_code;
}
