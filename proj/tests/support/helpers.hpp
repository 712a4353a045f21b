#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hkspread/ideal.hpp"
#include "hkspread/script.hpp"

namespace testing_helpers {

inline hkspread::RingPtr ring(std::uint32_t p, std::vector<std::string> vars,
                              hkspread::OrderKind order = hkspread::OrderKind::degrevlex) {
    return hkspread::Ring::polynomial_ring(p, std::move(vars), order);
}

/// Parses `text` as a polynomial in the variables of `r`.
inline hkspread::Polynomial poly(const hkspread::RingPtr& r, std::string_view text) {
    std::string src = "char " + std::to_string(r->characteristic()) + "; vars";
    for (const auto& v : r->variables()) src += " " + v;
    src += "; ideal poly_ = " + std::string(text) + ";";
    auto script = hkspread::parse_script(src);
    const auto& gens = script.ideals[0].generators;
    return gens.empty() ? hkspread::Polynomial(r) : gens[0].rebind(r);
}

inline hkspread::Ideal ideal(const hkspread::RingPtr& r, std::initializer_list<std::string_view> gens) {
    std::vector<hkspread::Polynomial> out;
    for (auto g : gens) out.push_back(poly(r, g));
    return hkspread::Ideal(r, std::move(out));
}

/// F_p[vars]/(relations).
inline hkspread::RingPtr quotient(std::uint32_t p, std::vector<std::string> vars,
                                  std::initializer_list<std::string_view> relations) {
    auto base = ring(p, std::move(vars));
    std::vector<hkspread::Polynomial> rels;
    for (auto r : relations) rels.push_back(poly(base, r));
    return hkspread::Ring::quotient(base, rels);
}

}  // namespace testing_helpers
