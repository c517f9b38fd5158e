#ifndef PPINV_TEXT_HPP
#define PPINV_TEXT_HPP

// Text formats shared by the command-line tool.
//
//   field:    p^n                  automatic modulus
//             p^n:c0,c1,...,cn     explicit monic modulus, low degree first
//   element:  17                   canonical index
//             [c0,c1,...]          polynomial-basis coordinates
//             g^k                  k-th power of the primitive element (k may be negative)
//   poly:     terms COEFF*x^EXP, x^EXP, COEFF*x, x, COEFF joined by + and -

#include <ppinv/gf.hpp>
#include <ppinv/polyring.hpp>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppinv {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::invalid_argument("at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline std::uint64_t parse_uint(std::string_view s, std::size_t pos, const char* what) {
    if (s.empty()) throw ParseError(pos, std::string("expected ") + what);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError(pos, std::string(what) + " overflows");
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(pos, std::string("malformed ") + what + " '" + std::string(s) + "'");
    return v;
}

inline std::int64_t parse_int(std::string_view s, std::size_t pos, const char* what) {
    if (!s.empty() && s.front() == '-') {
        const auto v = parse_uint(s.substr(1), pos + 1, what);
        if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ParseError(pos, std::string(what) + " overflows");
        return -static_cast<std::int64_t>(v);
    }
    const auto v = parse_uint(s, pos, what);
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw ParseError(pos, std::string(what) + " overflows");
    return static_cast<std::int64_t>(v);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

inline Elem parse_element_at(std::string_view s, const Field& F, std::size_t pos) {
    if (s.empty()) throw ParseError(pos, "expected an element literal");
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError(pos, "unterminated coordinate list");
        std::vector<std::uint64_t> coords;
        const auto body = s.substr(1, s.size() - 2);
        if (!body.empty()) {
            std::size_t off = pos + 1;
            for (auto part : split(body, ',')) {
                coords.push_back(parse_uint(part, off, "coordinate"));
                off += part.size() + 1;
            }
        }
        if (coords.size() > F.degree()) throw ParseError(pos, "too many coordinates for the field degree");
        for (auto c : coords)
            if (c >= F.characteristic()) throw ParseError(pos, "coordinate outside the prime field");
        return F.from_coords(coords);
    }
    if (s.size() >= 2 && s[0] == 'g' && s[1] == '^') {
        const auto k = parse_int(s.substr(2), pos + 2, "exponent");
        return F.pow(F.primitive(), k);
    }
    const auto idx = parse_uint(s, pos, "element index");
    if (idx >= F.order()) throw ParseError(pos, "element index " + std::to_string(idx) + " outside the field");
    return Elem{static_cast<std::uint32_t>(idx)};
}

} // namespace detail

/// Parses `p^n` or `p^n:c0,...,cn`.  A bare `p` means n = 1.
inline FieldPtr parse_field(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    const auto colon = s.find(':');
    const std::string_view head = std::string_view(s).substr(0, colon);
    const auto caret = head.find('^');
    const std::uint64_t p = detail::parse_uint(head.substr(0, caret), 0, "characteristic");
    std::uint64_t n = 1;
    if (caret != std::string_view::npos) n = detail::parse_uint(head.substr(caret + 1), caret + 1, "degree");
    if (n > 64) throw ParseError(caret + 1, "degree too large");
    std::optional<std::vector<std::uint64_t>> modulus;
    if (colon != std::string::npos) {
        modulus.emplace();
        std::size_t off = colon + 1;
        for (auto part : detail::split(std::string_view(s).substr(colon + 1), ',')) {
            modulus->push_back(detail::parse_uint(part, off, "modulus coefficient"));
            off += part.size() + 1;
        }
    }
    return Field::create(p, static_cast<unsigned>(n), modulus);
}

inline std::string format_field(const Field& F) {
    std::string s = std::to_string(F.characteristic()) + "^" + std::to_string(F.degree()) + ":";
    for (std::size_t i = 0; i < F.modulus().size(); ++i) s += (i ? "," : "") + std::to_string(F.modulus()[i]);
    return s;
}

inline Elem parse_element(std::string_view text, const Field& F) {
    return detail::parse_element_at(detail::strip_spaces(text), F, 0);
}

/// Parses a polynomial; exponents are folded modulo x^q - x.
inline Poly parse_poly(std::string_view text, const FieldPtr& field) {
    const Field& F = *field;
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError(0, "empty polynomial");

    std::vector<std::pair<Elem, std::uint64_t>> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            throw ParseError(i, "expected '+' or '-'");
        }
        // term runs to the next top-level sign not following '^'
        std::size_t j = i, depth = 0;
        for (; j < s.size(); ++j) {
            const char c = s[j];
            if (c == '[') ++depth;
            else if (c == ']') {
                if (depth == 0) throw ParseError(j, "unbalanced ']'");
                --depth;
            } else if ((c == '+' || c == '-') && depth == 0 && j > i && s[j - 1] != '^')
                break;
        }
        if (depth != 0) throw ParseError(i, "unterminated coordinate list");
        const std::string_view term = std::string_view(s).substr(i, j - i);
        if (term.empty()) throw ParseError(i, "empty term");

        Elem coef = F.one();
        std::string_view xpart;
        std::size_t xpos = i;
        if (const auto star = term.find('*'); star != std::string_view::npos) {
            coef = detail::parse_element_at(term.substr(0, star), F, i);
            xpart = term.substr(star + 1);
            xpos = i + star + 1;
            if (xpart.empty() || xpart.front() != 'x') throw ParseError(xpos, "expected 'x' after '*'");
        } else if (term.front() == 'x') {
            xpart = term;
        } else {
            coef = detail::parse_element_at(term, F, i);
        }
        std::uint64_t exponent = 0;
        if (!xpart.empty()) {
            if (xpart == "x") {
                exponent = 1;
            } else if (xpart.size() > 2 && xpart[1] == '^') {
                exponent = detail::parse_uint(xpart.substr(2), xpos + 2, "exponent");
            } else {
                throw ParseError(xpos, "malformed power of x '" + std::string(xpart) + "'");
            }
        }
        terms.emplace_back(negative ? F.neg(coef) : coef, exponent);
        i = j;
    }
    return Poly::from_terms(field, terms);
}

/// Human-readable form, highest degree first, coefficients as indices.
/// parse_poly(render_poly(f)) == f.
inline std::string render_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t e = c.size(); e-- > 0;) {
        if (c[e].index == 0) continue;
        if (!out.empty()) out += " + ";
        const bool unit = c[e].index == 1;
        if (e == 0) {
            out += std::to_string(c[e].index);
        } else {
            if (!unit) out += std::to_string(c[e].index) + "*";
            out += e == 1 ? "x" : "x^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace ppinv

#endif // PPINV_TEXT_HPP
