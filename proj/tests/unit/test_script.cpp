#include <catch_amalgamated.hpp>

#include "hkspread/script.hpp"

using namespace hkspread;

namespace {

struct Position {
    std::size_t line;
    std::size_t column;
    std::string message;
};

Position parse_failure(const std::string& text) {
    try {
        parse_script(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column(), e.what()};
    }
    FAIL("expected a parse error for: " << text);
    return {};
}

}  // namespace

TEST_CASE("minimal spread session", "[script]") {
    auto s = parse_script("char 2; vars x y; ideal J = x, y; spread J;");
    CHECK(s.ring->describe() == "F_2[x,y]");
    REQUIRE(s.ideals.size() == 1);
    CHECK(s.ideals[0].name == "J");
    CHECK(s.ideals[0].generators.size() == 2);
    REQUIRE(s.commands.size() == 1);
    CHECK(s.commands[0].kind == CommandKind::spread);
    CHECK(s.commands[0].names == std::vector<std::string>{"J"});
    CHECK_FALSE(s.commands[0].q0.has_value());
    CHECK(s.commands[0].line == 1);
    CHECK(s.commands[0].column == 35);
}

TEST_CASE("non-prime characteristic is reported at its token", "[script]") {
    auto e = parse_failure("char 4; vars x y; ideal J = x, y; spread J;");
    CHECK(e.message == "characteristic must be prime");
    CHECK(e.line == 1);
    CHECK(e.column == 6);
}

TEST_CASE("hypersurface session", "[script]") {
    auto s = parse_script("char 3; vars x y z; quotient x^2 + y*z; ideal a = x, y, z; ehk a e_max=3;");
    CHECK(s.ring->describe() == "F_3[x,y,z]/(x^2 + y*z)");
    CHECK(s.ring->dimension() == 2);
    REQUIRE(s.commands.size() == 1);
    CHECK(s.commands[0].kind == CommandKind::ehk);
    CHECK(s.commands[0].e_max == 3u);
}

TEST_CASE("newlines end statements and comments are ignored", "[script]") {
    auto s = parse_script("# header\nchar 5\nvars a b   # two variables\n\nideal I = a^2 - 2*a*b, (a + b)^3\nlength I\n");
    CHECK(s.ideals[0].generators[0].to_string() == "a^2 + 3*a*b");
    CHECK(s.ideals[0].generators[1].to_string() == "a^3 + 3*a^2*b + 3*a*b^2 + b^3");
    REQUIRE(s.commands.size() == 1);
    CHECK(s.commands[0].line == 6);
}

TEST_CASE("all command forms parse", "[script]") {
    auto s = parse_script(
        "char 2; vars x y\n"
        "ideal I = x^2, y^3; ideal J = x, y; ideal Z = 0\n"
        "gb I; length I; colon I J\n"
        "ehk I e_max=2 method=last\n"
        "spread J a=I q0=2 e_max=2; spread_hk I\n"
        "identity product I J ell=2 q=2,4\n"
        "identity self J q=2\n"
        "identity lemma33 I z=x + y a=J\n"
        "identity basechange J s=1 q=2,4\n"
        "identity corollary Z q0=1 e_max=2\n"
        "independent J\n");
    CHECK(s.ideals[2].generators.empty());
    REQUIRE(s.commands.size() == 12);
    const auto& product = s.commands[6];
    CHECK(product.kind == CommandKind::identity_product);
    CHECK(product.names == std::vector<std::string>{"I", "J"});
    CHECK(product.ell == 2);
    CHECK(product.q == std::vector<std::uint64_t>{2, 4});
    const auto& lemma = s.commands[8];
    CHECK(lemma.z->to_string() == "x + y");
    CHECK(lemma.a == "J");
    CHECK(s.commands[4].q0 == 2u);
    CHECK(s.commands[3].method == "last");
    CHECK(s.commands[9].s == 1u);
    CHECK(print_command(s.commands[6]) == "identity product I J ell=2 q=2,4");
    CHECK(to_string(CommandKind::identity_basechange) == "identity basechange");
}

TEST_CASE("parse errors carry positions", "[script]") {
    struct Case {
        std::string text;
        std::size_t line;
        std::size_t column;
        std::string fragment;
    };
    std::vector<Case> cases{
        {"char 2; vars x y; ideal I = x, w;", 1, 32, "unknown variable 'w'"},
        {"char 2\nvars x y\nquotient x^2 + y", 3, 10, "not homogeneous"},
        {"char 2; vars x y; ideal I = x; ideal I = y;", 1, 38, "duplicate binding"},
        {"char 2; vars x y; ideal I = x $ y;", 1, 31, "unexpected character"},
        {"char 2; vars x y; ideal I = x y;", 1, 31, "expected end of statement"},
        {"char 2; vars x y; ideal I = 2x;", 1, 30, "expected end of statement"},
        {"char 2; vars x y; length K;", 1, 26, "unknown ideal 'K'"},
        {"char 2; vars x y; ideal I = x; identity self I;", 1, 32, "missing required option 'q'"},
        {"char 2; vars x y; ideal I = x; ehk I e_max=1 e_max=2;", 1, 46, "duplicate option"},
        {"char 2; vars x y; ideal I = x; identity self I q=3;", 1, 50, "not a power of 2"},
        {"char 2; vars x y; ideal I = x; gb I e_max=2;", 1, 37, "not valid here"},
        {"char 2; vars x y; ideal I = x; ehk I method=magic;", 1, 45, "method must be"},
        {"char 2; vars x y; ideal I = x; quotient x^2;", 1, 32, "must precede"},
        {"vars x y;", 1, 1, "'char' must precede"},
        {"char 2;", 1, 8, "missing 'vars'"},
        {"char 2; vars x x;", 1, 16, "duplicate variable"},
        {"char 2; vars x y; frobnicate;", 1, 19, "unknown command"},
        {"char 2; vars x y; ideal I = (x + y;", 1, 35, "expected ')'"},
        {"char 2; vars x y; identity magic I;", 1, 28, "unknown identity"},
    };
    for (const auto& c : cases) {
        INFO(c.text);
        auto e = parse_failure(c.text);
        CHECK(e.message.find(c.fragment) != std::string::npos);
        CHECK(e.line == c.line);
        CHECK(e.column == c.column);
    }
}

TEST_CASE("parse and print reach a fixed point", "[script][property]") {
    const std::vector<std::string> sources{
        "char 2; vars x y; ideal J = x, y; spread J;",
        "char 3; vars x y z; quotient x^2 + y*z; ideal a = x, y, z; ehk a e_max=3;",
        "char 7\nvars u v w\nquotient u*v - w^2\nquotient u^3 + v^3\nideal I = -u, 3*v^2 + 2*u*w, 0\n"
        "ideal Z = 0\ngb I; colon I Z; spread_hk I a=I q0=7 e_max=1\n",
        "char 2; vars x y; ideal I = x; ideal J = x, y\n"
        "identity product I J ell=1 q=2,4,8; identity lemma33 I z=y^2 + x*y a=J q0=2 e_max=3\n"
        "identity basechange J s=2 q=2; identity corollary I; independent J q0=4 e_max=1; ehk J method=exact",
    };
    for (const auto& src : sources) {
        INFO(src);
        const std::string once = print_script(parse_script(src));
        const std::string twice = print_script(parse_script(once));
        CHECK(once == twice);
        auto a = parse_script(src), b = parse_script(once);
        REQUIRE(a.commands.size() == b.commands.size());
        for (std::size_t i = 0; i < a.commands.size(); ++i) CHECK(print_command(a.commands[i]) == print_command(b.commands[i]));
    }
}
