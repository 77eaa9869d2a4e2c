#include "contact_atlas/chow_parse.hpp"

#include <cctype>
#include <stdexcept>

namespace contact_atlas {
namespace {

struct Parser {
    const std::string& text;
    const RuledSurfaceParams& params;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("chow expression: " + what + " at column " +
                                    std::to_string(pos + 1));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digit");
        return Int(text.substr(start, pos - start));
    }

    Rat rational() {
        Int num = integer();
        if (!eat('/')) return Rat(num);
        std::size_t den_col = pos;
        Int den = integer();
        if (den == 0) {
            pos = den_col;
            fail("zero denominator");
        }
        return Rat(num) / Rat(den);
    }

    BundleClass generator() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string name = text.substr(start, pos - start);
        if (name == "xi") return bundle_xi();
        if (name == "l") return bundle_pullback(surface_l());
        if (name == "B0") return bundle_pullback(surface_b0());
        if (name == "pt") return bundle_pullback(surface_pt());
        if (name == "K") return bundle_scale(-2, bundle_xi());
        pos = start;
        fail(name.empty() ? "expected generator or rational"
                          : "unknown generator '" + name + "'");
    }

    // Returns the parsed factor and whether it was a bare rational literal,
    // which is the one position where the following '*' may be omitted.
    std::pair<BundleClass, bool> factor() {
        char c = peek();
        if (c == '-') {
            ++pos;
            auto [inner, lit] = factor();
            return {bundle_scale(-1, inner), lit};
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return {bundle_scale(rational(), bundle_unit()), true};
        return {generator(), false};
    }

    BundleClass term() {
        auto [acc, was_literal] = factor();
        for (;;) {
            if (eat('*')) {
                auto [next, lit] = factor();
                acc = bundle_mul(acc, next, params);
                was_literal = lit;
                continue;
            }
            char c = peek();
            if (was_literal && std::isalpha(static_cast<unsigned char>(c))) {
                acc = bundle_mul(acc, generator(), params);
                was_literal = false;
                continue;
            }
            return acc;
        }
    }

    BundleClass expr() {
        BundleClass acc = term();
        while (eat('+')) acc = bundle_add(acc, term());
        if (!at_end()) fail("unexpected input");
        return acc;
    }
};

}  // namespace

BundleClass parse_chow_expression(const std::string& text, const RuledSurfaceParams& params) {
    validate_params(params);
    Parser p{text, params};
    if (p.at_end()) p.fail("empty expression");
    return p.expr();
}

}  // namespace contact_atlas
