#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkspread/polynomial.hpp"

namespace hkspread {

enum class CommandKind {
    gb,
    length,
    colon,
    ehk,
    spread,
    spread_hk,
    identity_product,
    identity_self,
    identity_lemma33,
    identity_basechange,
    identity_corollary,
    independent,
};

std::string_view to_string(CommandKind kind) noexcept;

struct Command {
    CommandKind kind = CommandKind::gb;
    /// Ideal names, in the order the command takes them.
    std::vector<std::string> names;
    std::optional<std::string> a;
    std::optional<Polynomial> z;
    std::optional<std::int64_t> ell;
    std::optional<unsigned> s;
    /// q0 as a power of p (not its exponent).
    std::optional<std::uint64_t> q0;
    std::optional<unsigned> e_max;
    std::optional<std::string> method;
    /// Values of q, each a power of p.
    std::vector<std::uint64_t> q;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct IdealBinding {
    std::string name;
    std::vector<Polynomial> generators;
};

/// A parsed session: the ring plus named ideals and commands in source order.
struct SessionScript {
    RingPtr ring;
    std::vector<IdealBinding> ideals;
    std::vector<Command> commands;

    const IdealBinding* find(std::string_view name) const;
};

/// Parses the session language. Statements end with ';' or a newline; '#'
/// starts a comment. Throws ParseError with a 1-based line and column.
SessionScript parse_script(std::string_view text);

/// Canonical text of a script; parse_script(print_script(s)) reproduces s.
std::string print_script(const SessionScript& script);
std::string print_command(const Command& command);

}  // namespace hkspread
