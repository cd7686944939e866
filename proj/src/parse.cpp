#include "mldeg/parse.hpp"
#include "mldeg/errors.hpp"

#include <cctype>

namespace mldeg {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_integer() {
        skip_space();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty())
            throw ParseError("expected digits at position " + std::to_string(pos) +
                             " in '" + text + "'");
        return digits;
    }

    std::string read_identifier() {
        skip_space();
        std::string name;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])))) {
            name += text[pos++];
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                name += text[pos++];
        }
        return name;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vars) {
    Lexer lex(text);
    Polynomial result(vars);
    bool first_term = true;

    while (!lex.done()) {
        int sign = 1;
        if (lex.accept('+')) {
            // explicit plus
        } else if (lex.accept('-')) {
            sign = -1;
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(lex.pos) +
                             " in '" + text + "'");
        }
        // Additional signs stack (e.g. "- -x" is not in the grammar; reject).
        first_term = false;

        Rational coeff(sign);
        Monomial mono(vars->size());
        bool saw_factor = false;

        // Optional leading coefficient.
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            std::string num = lex.read_integer();
            std::string den;
            if (lex.accept('/')) den = lex.read_integer();
            Rational c(den.empty() ? num : num + "/" + den);
            c.canonicalize();
            coeff *= c;
            saw_factor = true;
            lex.accept('*'); // optional between coefficient and variables
        }

        // Variable powers joined by '*'.
        while (true) {
            char c = lex.peek();
            if (!std::isalpha(static_cast<unsigned char>(c))) break;
            std::string name = lex.read_identifier();
            auto idx = vars->find(name);
            if (!idx)
                throw ParseError("unknown variable '" + name + "' in '" + text + "'");
            std::uint32_t e = 1;
            if (lex.accept('^'))
                e = static_cast<std::uint32_t>(std::stoul(lex.read_integer()));
            mono.set_exponent(*idx, mono.exponent(*idx) + e);
            saw_factor = true;
            if (!lex.accept('*')) break;
        }

        if (!saw_factor)
            throw ParseError("empty term at position " + std::to_string(lex.pos) +
                             " in '" + text + "'");
        result.add_term(mono, coeff);
    }
    return result;
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    auto terms = f.sorted_terms(MonomialOrder::degrevlex());
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;

        std::string factors;
        for (std::size_t v = 0; v < f.vars()->size(); ++v) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += f.vars()->name(v);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += rational_to_string(a);
        } else if (a == 1) {
            out += factors;
        } else {
            out += rational_to_string(a) + "*" + factors;
        }
    }
    return out;
}

} // namespace mldeg
