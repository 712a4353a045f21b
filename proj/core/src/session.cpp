#include "hkspread/session.hpp"

#include <chrono>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "hkspread/version.hpp"

namespace hkspread {

using nlohmann::json;

std::string_view to_string(OutputFormat format) noexcept { return format == OutputFormat::csv ? "csv" : "json"; }

OutputFormat output_format_from_string(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw Error(ErrorKind::invalid_argument, "unknown format '" + std::string(name) + "' (expected json or csv)");
}

namespace {

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18)
        throw Error(ErrorKind::invalid_argument, std::string(name) + " must be a positive integer");
    auto v = std::stoull(text);
    if (v == 0) throw Error(ErrorKind::invalid_argument, std::string(name) + " must be a positive integer");
    return v;
}

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt big_from_json(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

unsigned exponent_of(std::uint64_t q, std::uint32_t p) { return FrobeniusExponent::from_q(q, p).exponent(); }

std::vector<std::string> generator_strings(std::span<const Polynomial> gens) {
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(g.to_string());
    return out;
}

}  // namespace

void apply_environment(Config& config) {
    config.limits.max_gb_steps = env_number("HKSPREAD_MAX_GB_STEPS", config.limits.max_gb_steps);
    auto e = env_number("HKSPREAD_MAX_EXPONENT", config.limits.max_exponent);
    if (e > std::numeric_limits<Exponent>::max())
        throw Error(ErrorKind::invalid_argument, "HKSPREAD_MAX_EXPONENT is too large");
    config.limits.max_exponent = static_cast<Exponent>(e);
}

json rational_to_json(const Rational& r) { return {{"num", big_to_json(numerator(r))}, {"den", big_to_json(denominator(r))}}; }

Rational rational_from_json(const json& j) {
    BigInt den = big_from_json(j.at("den"));
    if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
    return Rational(big_from_json(j.at("num")), den);
}

json number_to_json(const Number& n) {
    json j{{"exact", n.is_exact()}, {"approx", n.value()}};
    if (n.is_exact()) j["value"] = rational_to_json(n.rational());
    return j;
}

Number number_from_json(const json& j) {
    if (j.at("exact").get<bool>()) return Number::exact(rational_from_json(j.at("value")));
    return Number::approximate(j.at("approx").get<double>());
}

json to_json(const LengthValue& v) {
    if (!v.is_finite()) return {{"finite", false}};
    return {{"finite", true}, {"value", v.value()}};
}

namespace {

json sample_json(const HKSample& s) {
    return {{"e", s.e}, {"q", s.q}, {"colength", s.colength}, {"normalized", rational_to_json(s.normalized)}};
}

HKSample sample_from_json(const json& j) {
    return {j.at("e").get<unsigned>(), j.at("q").get<std::uint64_t>(), j.at("colength").get<std::uint64_t>(),
            rational_from_json(j.at("normalized"))};
}

EhkPath path_from_string(const std::string& s) {
    for (auto p : {EhkPath::monomial_exact, EhkPath::regular_exact, EhkPath::last_sample, EhkPath::linear_fit})
        if (to_string(p) == s) return p;
    throw Error(ErrorKind::parse, "unknown method '" + s + "'");
}

}  // namespace

json to_json(const HKEstimate& e) {
    json j{{"value", number_to_json(e.value)}, {"method", std::string(to_string(e.method))}, {"samples", json::array()}};
    for (const auto& s : e.samples) j["samples"].push_back(sample_json(s));
    j["extrapolated"] = e.extrapolated ? rational_to_json(*e.extrapolated) : json(nullptr);
    j["error_bound"] = e.error_bound ? rational_to_json(*e.error_bound) : json(nullptr);
    if (e.fit)
        j["fit"] = {{"leading", rational_to_json(e.fit->leading)},
                    {"secondary", rational_to_json(e.fit->secondary)},
                    {"residual", rational_to_json(e.fit->residual)}};
    else
        j["fit"] = nullptr;
    return j;
}

HKEstimate hk_estimate_from_json(const json& j) {
    HKEstimate e;
    e.value = number_from_json(j.at("value"));
    e.method = path_from_string(j.at("method").get<std::string>());
    for (const auto& s : j.at("samples")) e.samples.push_back(sample_from_json(s));
    if (!j.at("extrapolated").is_null()) e.extrapolated = rational_from_json(j.at("extrapolated"));
    if (!j.at("error_bound").is_null()) e.error_bound = rational_from_json(j.at("error_bound"));
    if (const auto& f = j.at("fit"); !f.is_null())
        e.fit = HilbertKunzFit{rational_from_json(f.at("leading")), rational_from_json(f.at("secondary")),
                               rational_from_json(f.at("residual"))};
    return e;
}

json to_json(const SpreadReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"q0_exponent", e.q0_exponent},
                           {"e", e.e},
                           {"q", e.q},
                           {"length", optional_json(e.length)},
                           {"ratio", number_to_json(e.ratio)},
                           {"nearest", e.nearest},
                           {"rounding_distance", e.rounding_distance}});
    return {{"method", r.method},
            {"ideal", r.ideal},
            {"reduction_ideal", r.reduction_ideal},
            {"ehk_reduction_ideal", number_to_json(r.ehk_reduction_ideal)},
            {"q0_schedule", r.q0_schedule},
            {"entries", entries},
            {"estimate", optional_json(r.estimate)},
            {"stabilized", r.stabilized},
            {"rounding_distance", r.rounding_distance},
            {"q0_exponent_used", r.q0_exponent_used}};
}

SpreadReport spread_report_from_json(const json& j) {
    SpreadReport r;
    r.method = j.at("method").get<std::string>();
    r.ideal = j.at("ideal").get<std::string>();
    r.reduction_ideal = j.at("reduction_ideal").get<std::string>();
    r.ehk_reduction_ideal = number_from_json(j.at("ehk_reduction_ideal"));
    r.q0_schedule = j.at("q0_schedule").get<std::vector<unsigned>>();
    for (const auto& e : j.at("entries")) {
        SpreadEntry s;
        s.q0_exponent = e.at("q0_exponent").get<unsigned>();
        s.e = e.at("e").get<unsigned>();
        s.q = e.at("q").get<std::uint64_t>();
        if (!e.at("length").is_null()) s.length = e.at("length").get<std::uint64_t>();
        s.ratio = number_from_json(e.at("ratio"));
        s.nearest = e.at("nearest").get<std::int64_t>();
        s.rounding_distance = e.at("rounding_distance").get<double>();
        r.entries.push_back(std::move(s));
    }
    if (!j.at("estimate").is_null()) r.estimate = j.at("estimate").get<std::int64_t>();
    r.stabilized = j.at("stabilized").get<bool>();
    r.rounding_distance = j.at("rounding_distance").get<double>();
    r.q0_exponent_used = j.at("q0_exponent_used").get<unsigned>();
    return r;
}

json to_json(const IdentityReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"label", c.label},
                          {"q", c.q},
                          {"lhs", number_to_json(c.lhs)},
                          {"rhs", number_to_json(c.rhs)},
                          {"residual", number_to_json(c.residual)},
                          {"pass", c.pass}});
    return {{"identity", r.identity}, {"checks", checks}, {"pass", r.pass}, {"tolerance", r.tolerance}, {"notes", r.notes}};
}

IdentityReport identity_report_from_json(const json& j) {
    IdentityReport r;
    r.identity = j.at("identity").get<std::string>();
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("label").get<std::string>(), c.at("q").get<std::vector<std::uint64_t>>(),
                            number_from_json(c.at("lhs")), number_from_json(c.at("rhs")),
                            number_from_json(c.at("residual")), c.at("pass").get<bool>()});
    r.pass = j.at("pass").get<bool>();
    r.tolerance = j.at("tolerance").get<double>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

json to_json(const ColonCriterionReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"e", s.e},
                           {"q", s.q},
                           {"unit_colon", s.unit_colon},
                           {"q0_exponent", optional_json(s.q0_exponent)},
                           {"colon_generators", s.colon_generators}});
    return {{"ideal", r.ideal},
            {"candidate", r.candidate},
            {"samples", samples},
            {"dependent", r.dependent},
            {"pass", r.pass},
            {"required_q0_exponent", optional_json(r.required_q0_exponent)},
            {"caveat", r.caveat}};
}

json to_json(const IndependenceReport& r) {
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(to_json(g));
    return {{"generators", gens},
            {"all_pass", r.all_pass},
            {"dependence_certified", r.dependence_certified},
            {"caveat", r.caveat}};
}

namespace {

json config_json(const Config& c) {
    return {{"format", std::string(to_string(c.format))},
            {"order", std::string(to_string(c.order))},
            {"max_gb_steps", c.limits.max_gb_steps},
            {"max_basis_size", c.limits.max_basis_size},
            {"max_exponent", c.limits.max_exponent}};
}

Config config_from_json(const json& j) {
    Config c;
    c.format = output_format_from_string(j.at("format").get<std::string>());
    c.order = order_kind_from_string(j.at("order").get<std::string>());
    c.limits.max_gb_steps = j.at("max_gb_steps").get<std::uint64_t>();
    c.limits.max_basis_size = j.at("max_basis_size").get<std::size_t>();
    c.limits.max_exponent = j.at("max_exponent").get<Exponent>();
    return c;
}

}  // namespace

json to_json(const Report& r, bool include_timing) {
    json results = json::array();
    for (const auto& c : r.results) {
        json item{{"index", c.index}, {"command", c.command}, {"status", c.status}, {"result", c.result}};
        if (c.error_kind) item["error"] = {{"kind", *c.error_kind}, {"message", c.message.value_or("")}};
        results.push_back(std::move(item));
    }
    json j{{"schema_version", r.schema_version},
           {"tool_version", r.tool_version},
           {"config", config_json(r.config)},
           {"ring", r.ring},
           {"results", results},
           {"status", r.status}};
    if (include_timing) j["timing"] = {{"total_ms", r.timing.total_ms}, {"command_ms", r.timing.command_ms}};
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion)
        throw Error(ErrorKind::parse, "unsupported schema_version " + std::to_string(r.schema_version));
    r.tool_version = j.at("tool_version").get<std::string>();
    r.config = config_from_json(j.at("config"));
    r.ring = j.at("ring").get<std::string>();
    for (const auto& item : j.at("results")) {
        CommandResult c;
        c.index = item.at("index").get<std::size_t>();
        c.command = item.at("command").get<std::string>();
        c.status = item.at("status").get<std::string>();
        c.result = item.at("result");
        if (item.contains("error")) {
            c.error_kind = item["error"].at("kind").get<std::string>();
            c.message = item["error"].at("message").get<std::string>();
        }
        r.results.push_back(std::move(c));
    }
    r.status = j.at("status").get<std::string>();
    if (j.contains("timing")) {
        r.timing.total_ms = j["timing"].at("total_ms").get<double>();
        r.timing.command_ms = j["timing"].at("command_ms").get<std::vector<double>>();
    }
    return r;
}

namespace {

class Runner {
   public:
    Runner(const SessionScript& script, const Config& config) : script_(script) {
        ring_ = script.ring->with_order(MonomialOrder(config.order, script.ring->nvars()))->with_limits(config.limits);
    }

    const RingPtr& ring() const { return ring_; }

    /// Returns the payload and whether every identity check held.
    std::pair<json, bool> execute(const Command& c) {
        const std::uint32_t p = ring_->characteristic();
        const unsigned e_max = c.e_max.value_or(3);
        switch (c.kind) {
            case CommandKind::gb: {
                Ideal i = ideal(c.names[0]);
                const auto& gb = i.groebner();
                return {{{"generators", generator_strings(gb.elements())},
                         {"order", std::string(to_string(ring_->order().kind()))},
                         {"dimension", krull_dimension(gb)}},
                        true};
            }
            case CommandKind::length: return {{{"length", to_json(length_quotient(ideal(c.names[0])))}}, true};
            case CommandKind::colon: {
                Ideal k = ideal_colon(ideal(c.names[0]), ideal(c.names[1]));
                return {{{"generators", generator_strings(k.groebner().elements())},
                         {"length", to_json(length_quotient(k))}},
                        true};
            }
            case CommandKind::ehk: {
                auto method = ehk_method_from_string(c.method.value_or("auto"));
                return {to_json(ehk_estimate(ideal(c.names[0]), e_max, method)), true};
            }
            case CommandKind::spread:
            case CommandKind::spread_hk: {
                SpreadOptions options;
                options.e_max = e_max;
                options.ehk_e_max = e_max;
                if (c.q0) options.q0_exponent = exponent_of(*c.q0, p);
                Ideal a = c.a ? ideal(*c.a) : Ideal::maximal(ring_);
                Ideal j = ideal(c.names[0]);
                auto r = c.kind == CommandKind::spread ? star_spread_estimate(j, a, options)
                                                       : star_spread_hk_difference(j, a, options);
                return {to_json(r), true};
            }
            case CommandKind::identity_product:
                return identity(check_product_identity(ideal(c.names[0]), ideal(c.names[1]), *c.ell, exponents(c.q),
                                                       options(c)));
            case CommandKind::identity_self:
                return identity(check_self_product(ideal(c.names[0]), exponents(c.q), options(c)));
            case CommandKind::identity_lemma33: {
                Ideal a = c.a ? ideal(*c.a) : Ideal::maximal(ring_);
                unsigned q0 = c.q0 ? exponent_of(*c.q0, p) : 0;
                return identity(check_lemma33_additivity(ideal(c.names[0]), c.z->rebind(ring_), a, q0, e_max, options(c)));
            }
            case CommandKind::identity_basechange:
                return identity(check_base_change(ideal(c.names[0]), *c.s, exponents(c.q), options(c)));
            case CommandKind::identity_corollary: {
                unsigned q0 = c.q0 ? exponent_of(*c.q0, p) : 0;
                return identity(check_corollary_vanishing(ideal(c.names[0]), q0, e_max, options(c)));
            }
            case CommandKind::independent: {
                Ideal i = ideal(c.names[0]);
                unsigned cap = c.q0 ? exponent_of(*c.q0, p) : 1;
                unsigned samples = c.e_max.value_or(2);
                return {to_json(star_independence_diagnostic(i.generators(), cap, samples)), true};
            }
        }
        throw Error(ErrorKind::invalid_argument, "unknown command");
    }

   private:
    const SessionScript& script_;
    RingPtr ring_;

    Ideal ideal(const std::string& name) const {
        const IdealBinding* b = script_.find(name);
        if (!b) throw Error(ErrorKind::invalid_argument, "unknown ideal '" + name + "'");
        std::vector<Polynomial> gens;
        for (const auto& g : b->generators) gens.push_back(g.rebind(ring_));
        return Ideal(ring_, std::move(gens));
    }

    std::vector<unsigned> exponents(const std::vector<std::uint64_t>& qs) const {
        std::vector<unsigned> out;
        for (auto q : qs) out.push_back(exponent_of(q, ring_->characteristic()));
        return out;
    }

    static IdentityOptions options(const Command& c) {
        IdentityOptions o;
        o.ehk_e_max = c.e_max.value_or(3);
        return o;
    }

    static std::pair<json, bool> identity(const IdentityReport& r) { return {to_json(r), r.pass}; }
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

Report run_script(const SessionScript& script, const Config& config) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.tool_version = kVersion;
    report.config = config;
    Runner runner(script, config);
    report.ring = runner.ring()->describe();
    bool all_ok = true;
    for (std::size_t i = 0; i < script.commands.size(); ++i) {
        const Command& c = script.commands[i];
        CommandResult result;
        result.index = i;
        result.command = print_command(c);
        const auto t = std::chrono::steady_clock::now();
        try {
            auto [payload, pass] = runner.execute(c);
            result.result = std::move(payload);
            result.status = pass ? "ok" : "fail";
        } catch (const Error& e) {
            result.status = "error";
            result.error_kind = std::string(to_string(e.kind()));
            result.message = e.what();
        } catch (const std::bad_alloc&) {
            result.status = "error";
            result.error_kind = std::string(to_string(ErrorKind::resource_limit));
            result.message = "out of memory";
        }
        report.timing.command_ms.push_back(elapsed_ms(t));
        all_ok = all_ok && result.status == "ok";
        report.results.push_back(std::move(result));
    }
    report.status = all_ok ? "ok" : "fail";
    report.timing.total_ms = elapsed_ms(start);
    return report;
}

std::string render_json(const Report& report, bool include_timing) {
    return to_json(report, include_timing).dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string number_text(const json& n) {
    if (n.at("exact").get<bool>()) return to_string(rational_from_json(n.at("value")));
    std::ostringstream os;
    os.precision(12);
    os << n.at("approx").get<double>();
    return os.str();
}

}  // namespace

std::string render_csv(const Report& report) {
    std::ostringstream os;
    os << "index,command,status,table,e,q,length,value\n";
    auto row = [&](const CommandResult& c, const std::string& table, const std::string& e, const std::string& q,
                   const std::string& length, const std::string& value) {
        os << c.index << ',' << csv_field(c.command) << ',' << c.status << ',' << csv_field(table) << ',' << e << ','
           << csv_field(q) << ',' << length << ',' << csv_field(value) << '\n';
    };
    for (const auto& c : report.results) {
        const json& r = c.result;
        if (c.status == "error") {
            row(c, "error", "", "", "", c.error_kind.value_or("") + ": " + c.message.value_or(""));
            continue;
        }
        if (r.contains("samples") && r.contains("method") && r.contains("value")) {
            for (const auto& s : r["samples"])
                row(c, "hk_sample", std::to_string(s["e"].get<unsigned>()), std::to_string(s["q"].get<std::uint64_t>()),
                    std::to_string(s["colength"].get<std::uint64_t>()),
                    to_string(rational_from_json(s["normalized"])));
            row(c, "ehk", "", "", "", number_text(r["value"]));
        } else if (r.contains("entries")) {
            for (const auto& e : r["entries"])
                row(c, "spread", std::to_string(e["e"].get<unsigned>()), std::to_string(e["q"].get<std::uint64_t>()),
                    e["length"].is_null() ? "" : std::to_string(e["length"].get<std::uint64_t>()),
                    number_text(e["ratio"]));
            row(c, "estimate", "", "", "", r["estimate"].is_null() ? "" : std::to_string(r["estimate"].get<std::int64_t>()));
        } else if (r.contains("checks")) {
            for (const auto& k : r["checks"]) {
                std::string qs;
                for (const auto& q : k["q"]) qs += (qs.empty() ? "" : ";") + std::to_string(q.get<std::uint64_t>());
                row(c, "check:" + k["label"].get<std::string>(), "", qs, "", number_text(k["residual"]));
            }
            row(c, "identity", "", "", "", r["pass"].get<bool>() ? "pass" : "fail");
        } else if (r.contains("length") && !r.contains("generators")) {
            const json& l = r["length"];
            row(c, "length", "", "", l["finite"].get<bool>() ? std::to_string(l["value"].get<std::uint64_t>()) : "infinite", "");
        } else if (r.contains("all_pass")) {
            row(c, "independence", "", "", "", r["all_pass"].get<bool>() ? "pass" : "fail");
        } else if (r.contains("generators")) {
            std::string gens;
            for (const auto& g : r["generators"]) gens += (gens.empty() ? "" : "; ") + g.get<std::string>();
            std::string length;
            if (r.contains("length"))
                length = r["length"]["finite"].get<bool>() ? std::to_string(r["length"]["value"].get<std::uint64_t>())
                                                           : "infinite";
            row(c, c.command.rfind("gb", 0) == 0 ? "gb" : "colon", "", "", length, gens);
        }
    }
    return os.str();
}

json parse_error_to_json(const ParseError& error) {
    return {{"schema_version", kSchemaVersion},
            {"tool_version", kVersion},
            {"status", "parse_error"},
            {"error", {{"kind", "parse"}, {"message", error.what()}, {"line", error.line()}, {"column", error.column()}}}};
}

SessionOutput run_session(std::string_view source, const Config& config, bool include_timing) {
    SessionScript script;
    try {
        script = parse_script(source);
    } catch (const ParseError& e) {
        return {parse_error_to_json(e).dump(2) + "\n", kExitParseError};
    } catch (const Error& e) {
        // Building the ring can fail after the text itself parsed.
        json j{{"schema_version", kSchemaVersion},
               {"tool_version", kVersion},
               {"status", "error"},
               {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
        return {j.dump(2) + "\n", kExitFailed};
    }
    Report report = run_script(script, config);
    std::string text = config.format == OutputFormat::csv ? render_csv(report) : render_json(report, include_timing);
    return {std::move(text), report.succeeded() ? kExitOk : kExitFailed};
}

}  // namespace hkspread
