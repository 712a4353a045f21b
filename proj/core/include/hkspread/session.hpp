#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hkspread/length.hpp"
#include "hkspread/script.hpp"
#include "hkspread/spread.hpp"

namespace hkspread {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { json, csv };

std::string_view to_string(OutputFormat format) noexcept;
OutputFormat output_format_from_string(std::string_view name);

struct Config {
    OutputFormat format = OutputFormat::json;
    OrderKind order = OrderKind::degrevlex;
    Limits limits;

    friend bool operator==(const Config&, const Config&) = default;
};

/// Reads HKSPREAD_MAX_GB_STEPS and HKSPREAD_MAX_EXPONENT into `config`.
/// Throws ErrorKind::invalid_argument on malformed values.
void apply_environment(Config& config);

struct CommandResult {
    std::size_t index = 0;
    /// Canonical echo of the command.
    std::string command;
    /// "ok", "fail" (an identity check did not hold) or "error".
    std::string status;
    std::optional<std::string> error_kind;
    std::optional<std::string> message;
    nlohmann::json result;

    friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

struct Timing {
    double total_ms = 0.0;
    std::vector<double> command_ms;

    friend bool operator==(const Timing&, const Timing&) = default;
};

struct Report {
    int schema_version = kSchemaVersion;
    std::string tool_version;
    Config config;
    std::string ring;
    std::vector<CommandResult> results;
    /// "ok" when every command returned status "ok", otherwise "fail".
    std::string status;
    Timing timing;

    bool succeeded() const noexcept { return status == "ok"; }

    friend bool operator==(const Report&, const Report&) = default;
};

/// Executes the commands in order. A failing command records its error and
/// the run continues with the next one.
Report run_script(const SessionScript& script, const Config& config = {});

// Exact rationals serialize as {"num": n, "den": d}.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json number_to_json(const Number& n);
Number number_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LengthValue& v);
nlohmann::json to_json(const HKEstimate& e);
nlohmann::json to_json(const SpreadReport& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const ColonCriterionReport& r);
nlohmann::json to_json(const IndependenceReport& r);
nlohmann::json to_json(const Report& r, bool include_timing = true);

HKEstimate hk_estimate_from_json(const nlohmann::json& j);
SpreadReport spread_report_from_json(const nlohmann::json& j);
IdentityReport identity_report_from_json(const nlohmann::json& j);
Report report_from_json(const nlohmann::json& j);

/// Pretty-printed JSON followed by a newline.
std::string render_json(const Report& report, bool include_timing = true);
/// One row per sample, spread entry or identity check, plus a summary row per command.
std::string render_csv(const Report& report);

nlohmann::json parse_error_to_json(const ParseError& error);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitParseError = 2;

struct SessionOutput {
    std::string text;
    /// kExitOk, kExitFailed, or kExitParseError.
    int exit_code = kExitOk;
};

/// Parses and runs `source`, rendering in config.format. A parse error
/// renders as a JSON object with status "parse_error".
SessionOutput run_session(std::string_view source, const Config& config = {}, bool include_timing = true);

}  // namespace hkspread
