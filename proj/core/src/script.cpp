#include "hkspread/script.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace hkspread {

std::string_view to_string(CommandKind kind) noexcept {
    switch (kind) {
        case CommandKind::gb: return "gb";
        case CommandKind::length: return "length";
        case CommandKind::colon: return "colon";
        case CommandKind::ehk: return "ehk";
        case CommandKind::spread: return "spread";
        case CommandKind::spread_hk: return "spread_hk";
        case CommandKind::identity_product: return "identity product";
        case CommandKind::identity_self: return "identity self";
        case CommandKind::identity_lemma33: return "identity lemma33";
        case CommandKind::identity_basechange: return "identity basechange";
        case CommandKind::identity_corollary: return "identity corollary";
        case CommandKind::independent: return "independent";
    }
    return "unknown";
}

const IdealBinding* SessionScript::find(std::string_view name) const {
    for (const auto& b : ideals)
        if (b.name == name) return &b;
    return nullptr;
}

namespace {

enum class Tok { ident, integer, symbol, end_of_statement, end_of_input };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance();
            continue;
        }
        if (c == '\n' || c == ';') {
            out.push_back({Tok::end_of_statement, std::string(1, c), line, col});
            advance();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        const std::size_t l = line, k = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                word += text[i];
                advance();
            }
            out.push_back({Tok::ident, word, l, k});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                digits += text[i];
                advance();
            }
            out.push_back({Tok::integer, digits, l, k});
            continue;
        }
        if (std::string_view("=,+-*^()").find(c) != std::string_view::npos) {
            out.push_back({Tok::symbol, std::string(1, c), l, k});
            advance();
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
    out.push_back({Tok::end_of_input, "", line, col});
    return out;
}

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    SessionScript run() {
        while (peek().kind != Tok::end_of_input) {
            if (peek().kind == Tok::end_of_statement) {
                ++pos_;
                continue;
            }
            statement();
            if (peek().kind == Tok::end_of_statement)
                ++pos_;
            else if (peek().kind != Tok::end_of_input)
                fail("expected end of statement", peek());
        }
        if (!characteristic_) fail("missing 'char' declaration", peek());
        if (variables_.empty()) fail("missing 'vars' declaration", peek());
        finish_ring();
        return std::move(script_);
    }

   private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::optional<std::uint32_t> characteristic_;
    std::vector<std::string> variables_;
    RingPtr ambient_;
    std::vector<Polynomial> relations_;
    SessionScript script_;

    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] static void fail(const std::string& message, const Token& at) {
        throw ParseError(message, at.line, at.column);
    }

    bool at_symbol(char c) const { return peek().kind == Tok::symbol && peek().text[0] == c; }
    void expect_symbol(char c) {
        if (!at_symbol(c)) fail(std::string("expected '") + c + "'", peek());
        ++pos_;
    }
    const Token& expect_ident(const char* what) {
        if (peek().kind != Tok::ident) fail(std::string("expected ") + what, peek());
        return take();
    }
    std::uint64_t expect_integer(const char* what) {
        if (peek().kind != Tok::integer) fail(std::string("expected ") + what, peek());
        const Token& t = take();
        if (t.text.size() > 18) fail("integer too large", t);
        return std::stoull(t.text);
    }
    bool at_statement_end() const { return peek().kind == Tok::end_of_statement || peek().kind == Tok::end_of_input; }

    void finish_ring() {
        if (script_.ring) return;
        script_.ring = relations_.empty() ? ambient_ : Ring::quotient(ambient_, relations_);
    }

    void statement() {
        const Token& head = expect_ident("a statement keyword");
        const std::string& word = head.text;
        if (word == "char") return declare_char(head);
        if (word == "vars") return declare_vars(head);
        if (!ambient_) fail("'char' and 'vars' must come first", head);
        if (word == "quotient") return declare_quotient(head);
        finish_ring();
        if (word == "ideal") return declare_ideal();
        command(head);
    }

    void declare_char(const Token& head) {
        if (characteristic_) fail("duplicate 'char' declaration", head);
        const Token& t = peek();
        std::uint64_t p = expect_integer("a characteristic");
        if (p >= (1u << 31) || !is_prime(p)) fail("characteristic must be prime", t);
        characteristic_ = static_cast<std::uint32_t>(p);
    }

    void declare_vars(const Token& head) {
        if (!characteristic_) fail("'char' must precede 'vars'", head);
        if (!variables_.empty()) fail("duplicate 'vars' declaration", head);
        std::set<std::string> seen;
        while (!at_statement_end()) {
            const Token& t = expect_ident("a variable name");
            if (!seen.insert(t.text).second) fail("duplicate variable '" + t.text + "'", t);
            variables_.push_back(t.text);
        }
        if (variables_.empty()) fail("expected at least one variable", head);
        ambient_ = Ring::polynomial_ring(*characteristic_, variables_);
    }

    void declare_quotient(const Token& head) {
        if (script_.ring) fail("'quotient' must precede ideals and commands", head);
        const Token& start = peek();
        Polynomial f = polynomial();
        if (!f.is_homogeneous()) fail("quotient relation is not homogeneous", start);
        relations_.push_back(std::move(f));
    }

    void declare_ideal() {
        const Token& name = expect_ident("an ideal name");
        if (script_.find(name.text)) fail("duplicate binding '" + name.text + "'", name);
        expect_symbol('=');
        IdealBinding binding{name.text, {}};
        for (;;) {
            Polynomial f = polynomial().rebind(script_.ring);
            if (!f.is_zero()) binding.generators.push_back(std::move(f));
            if (!at_symbol(',')) break;
            ++pos_;
        }
        script_.ideals.push_back(std::move(binding));
    }

    std::string ideal_name() {
        const Token& t = expect_ident("an ideal name");
        if (!script_.find(t.text)) fail("unknown ideal '" + t.text + "'", t);
        return t.text;
    }

    void command(const Token& head) {
        Command cmd;
        cmd.line = head.line;
        cmd.column = head.column;
        std::set<std::string> allowed;
        const std::string& word = head.text;
        if (word == "gb" || word == "length") {
            cmd.kind = word == "gb" ? CommandKind::gb : CommandKind::length;
            cmd.names.push_back(ideal_name());
        } else if (word == "colon") {
            cmd.kind = CommandKind::colon;
            cmd.names.push_back(ideal_name());
            cmd.names.push_back(ideal_name());
        } else if (word == "ehk") {
            cmd.kind = CommandKind::ehk;
            cmd.names.push_back(ideal_name());
            allowed = {"e_max", "method"};
        } else if (word == "spread" || word == "spread_hk") {
            cmd.kind = word == "spread" ? CommandKind::spread : CommandKind::spread_hk;
            cmd.names.push_back(ideal_name());
            allowed = {"a", "q0", "e_max"};
        } else if (word == "independent") {
            cmd.kind = CommandKind::independent;
            cmd.names.push_back(ideal_name());
            allowed = {"q0", "e_max"};
        } else if (word == "identity") {
            const Token& sub = expect_ident("an identity name");
            if (sub.text == "product") {
                cmd.kind = CommandKind::identity_product;
                cmd.names.push_back(ideal_name());
                cmd.names.push_back(ideal_name());
                allowed = {"ell", "q", "e_max"};
            } else if (sub.text == "self") {
                cmd.kind = CommandKind::identity_self;
                cmd.names.push_back(ideal_name());
                allowed = {"q", "e_max"};
            } else if (sub.text == "lemma33") {
                cmd.kind = CommandKind::identity_lemma33;
                cmd.names.push_back(ideal_name());
                allowed = {"z", "a", "q0", "e_max"};
            } else if (sub.text == "basechange") {
                cmd.kind = CommandKind::identity_basechange;
                cmd.names.push_back(ideal_name());
                allowed = {"s", "q", "e_max"};
            } else if (sub.text == "corollary") {
                cmd.kind = CommandKind::identity_corollary;
                cmd.names.push_back(ideal_name());
                allowed = {"q0", "e_max"};
            } else {
                fail("unknown identity '" + sub.text + "'", sub);
            }
        } else {
            fail("unknown command '" + word + "'", head);
        }
        options(cmd, allowed);
        require_options(cmd, head);
        script_.commands.push_back(std::move(cmd));
    }

    std::uint64_t power_of_p(const Token& at) {
        std::uint64_t v = expect_integer("a power of the characteristic");
        try {
            FrobeniusExponent::from_q(v, *characteristic_);
        } catch (const Error&) {
            fail("value " + std::to_string(v) + " is not a power of " + std::to_string(*characteristic_), at);
        }
        return v;
    }

    void options(Command& cmd, const std::set<std::string>& allowed) {
        std::set<std::string> seen;
        while (!at_statement_end()) {
            const Token& key = expect_ident("an option");
            if (!allowed.count(key.text)) fail("option '" + key.text + "' is not valid here", key);
            if (!seen.insert(key.text).second) fail("duplicate option '" + key.text + "'", key);
            expect_symbol('=');
            const Token& value = peek();
            if (key.text == "e_max") {
                auto v = expect_integer("an integer");
                if (v > 64) fail("e_max is too large", value);
                cmd.e_max = static_cast<unsigned>(v);
            } else if (key.text == "q0") {
                cmd.q0 = power_of_p(value);
            } else if (key.text == "ell") {
                cmd.ell = static_cast<std::int64_t>(expect_integer("an integer"));
            } else if (key.text == "s") {
                auto v = expect_integer("an integer");
                if (v == 0 || v > 8) fail("s must be between 1 and 8", value);
                cmd.s = static_cast<unsigned>(v);
            } else if (key.text == "a") {
                cmd.a = ideal_name();
            } else if (key.text == "method") {
                const Token& m = expect_ident("fit, last or exact");
                if (m.text != "fit" && m.text != "last" && m.text != "exact")
                    fail("method must be fit, last or exact", m);
                cmd.method = m.text;
            } else if (key.text == "q") {
                for (;;) {
                    cmd.q.push_back(power_of_p(peek()));
                    if (!at_symbol(',')) break;
                    ++pos_;
                }
            } else if (key.text == "z") {
                cmd.z = polynomial().rebind(script_.ring);
            }
        }
    }

    void require_options(const Command& cmd, const Token& head) {
        auto need = [&](bool present, const char* name) {
            if (!present) fail(std::string("missing required option '") + name + "'", head);
        };
        switch (cmd.kind) {
            case CommandKind::identity_product:
                need(cmd.ell.has_value(), "ell");
                need(!cmd.q.empty(), "q");
                break;
            case CommandKind::identity_self: need(!cmd.q.empty(), "q"); break;
            case CommandKind::identity_lemma33: need(cmd.z.has_value(), "z"); break;
            case CommandKind::identity_basechange:
                need(cmd.s.has_value(), "s");
                need(!cmd.q.empty(), "q");
                break;
            default: break;
        }
    }

    // Polynomials: sums of products of powers; implicit multiplication is not allowed.
    Polynomial polynomial() {
        Polynomial acc(ambient_);
        bool negate = false;
        if (at_symbol('-')) {
            negate = true;
            ++pos_;
        } else if (at_symbol('+')) {
            ++pos_;
        }
        acc = product();
        if (negate) acc = -acc;
        while (at_symbol('+') || at_symbol('-')) {
            bool minus = take().text[0] == '-';
            Polynomial t = product();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = factor();
        while (at_symbol('*')) {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (at_symbol('^')) {
            ++pos_;
            const Token& t = peek();
            auto n = expect_integer("an exponent");
            if (n > ambient_->limits().max_exponent) fail("exponent too large", t);
            base = power(base, n);
        }
        return base;
    }

    Polynomial atom() {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            ++pos_;
            if (t.text.size() > 18) fail("integer too large", t);
            return Polynomial::constant(ambient_, static_cast<std::int64_t>(std::stoull(t.text) % *characteristic_));
        }
        if (t.kind == Tok::ident) {
            ++pos_;
            auto index = ambient_->index_of(t.text);
            if (!index) fail("unknown variable '" + t.text + "'", t);
            return Polynomial::variable(ambient_, *index);
        }
        if (at_symbol('(')) {
            ++pos_;
            Polynomial inner = polynomial();
            expect_symbol(')');
            return inner;
        }
        if (at_symbol('-')) {
            ++pos_;
            return -atom();
        }
        fail("expected a polynomial", t);
    }
};

}  // namespace

SessionScript parse_script(std::string_view text) { return Parser(lex(text)).run(); }

std::string print_command(const Command& command) {
    std::ostringstream os;
    os << to_string(command.kind);
    for (const auto& n : command.names) os << ' ' << n;
    if (command.a) os << " a=" << *command.a;
    if (command.z) os << " z=" << command.z->to_string();
    if (command.ell) os << " ell=" << *command.ell;
    if (command.s) os << " s=" << *command.s;
    if (command.q0) os << " q0=" << *command.q0;
    if (command.e_max) os << " e_max=" << *command.e_max;
    if (command.method) os << " method=" << *command.method;
    if (!command.q.empty()) {
        os << " q=";
        for (std::size_t i = 0; i < command.q.size(); ++i) os << (i ? "," : "") << command.q[i];
    }
    return os.str();
}

std::string print_script(const SessionScript& script) {
    std::ostringstream os;
    const auto& ring = *script.ring;
    os << "char " << ring.characteristic() << ";\n";
    os << "vars";
    for (const auto& v : ring.variables()) os << ' ' << v;
    os << ";\n";
    for (const auto& r : ring.relations()) os << "quotient " << r.to_string() << ";\n";
    for (const auto& b : script.ideals) {
        os << "ideal " << b.name << " =";
        if (b.generators.empty()) os << " 0";
        for (std::size_t i = 0; i < b.generators.size(); ++i) os << (i ? ", " : " ") << b.generators[i].to_string();
        os << ";\n";
    }
    for (const auto& c : script.commands) os << print_command(c) << ";\n";
    return os.str();
}

}  // namespace hkspread
