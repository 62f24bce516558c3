#include "trinv/parser.hpp"

#include <cctype>
#include <optional>

namespace trinv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Token {
    enum Kind { plus, star, caret, lparen, rparen, integer, ident, end };
    Kind kind;
    std::string text;
    size_t pos;  // 1-based offset in the input
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        const size_t pos = i_ + 1;
        if (i_ >= text_.size()) return {Token::end, "", pos};
        const char c = text_[i_];
        switch (c) {
            case '+': ++i_; return {Token::plus, "+", pos};
            case '*': ++i_; return {Token::star, "*", pos};
            case '^': ++i_; return {Token::caret, "^", pos};
            case '(': ++i_; return {Token::lparen, "(", pos};
            case ')': ++i_; return {Token::rparen, ")", pos};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            return {Token::integer, std::string(text_.substr(start, i_ - start)), pos};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const size_t start = i_;
            while (i_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[i_])))
                ++i_;
            return {Token::ident, std::string(text_.substr(start, i_ - start)), pos};
        }
        fail(errc::syntax_error, std::string("unexpected character '") + c + "' at position " +
                                     std::to_string(pos));
    }

private:
    std::string_view text_;
    size_t i_ = 0;
};

class PolyParser {
public:
    PolyParser(std::string_view text, Field field, SlotContext context)
        : lexer_(text), field_(std::move(field)), context_(context) {
        advance();
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (tok_.kind != Token::end)
            fail(errc::syntax_error,
                 "unexpected '" + tok_.text + "' at position " + std::to_string(tok_.pos));
        return p;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    uint32_t exponent() {
        if (tok_.kind != Token::integer)
            fail(errc::syntax_error,
                 "expected an integer exponent at position " + std::to_string(tok_.pos));
        uint64_t value = 0;
        for (const char c : tok_.text) {
            value = value * 10 + static_cast<uint64_t>(c - '0');
            if (value > UINT32_MAX)
                fail(errc::exponent_overflow,
                     "exponent at position " + std::to_string(tok_.pos) + " is too large");
        }
        advance();
        return static_cast<uint32_t>(value);
    }

    Polynomial expr() {
        Polynomial p = term();
        while (tok_.kind == Token::plus) {
            advance();
            p += term();
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (tok_.kind == Token::star) {
            advance();
            p *= factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = atom();
        if (tok_.kind == Token::caret) {
            advance();
            p = p.pow(exponent());
        }
        return p;
    }

    Polynomial atom() {
        if (tok_.kind == Token::lparen) {
            advance();
            Polynomial p = expr();
            if (tok_.kind != Token::rparen)
                fail(errc::syntax_error,
                     "expected ')' at position " + std::to_string(tok_.pos));
            advance();
            return p;
        }
        if (tok_.kind == Token::integer) {
            if (tok_.text != "0" && tok_.text != "1")
                fail(errc::syntax_error, "integer constant '" + tok_.text + "' at position " +
                                             std::to_string(tok_.pos) +
                                             " is not a field literal (use 0, 1 or g powers)");
            const uint16_t bits = tok_.text == "1" ? 1 : 0;
            advance();
            return Polynomial::constant(field_, bits);
        }
        if (tok_.kind == Token::ident) {
            const Polynomial p = resolve(tok_.text, tok_.pos);
            advance();
            return p;
        }
        fail(errc::syntax_error,
             "expected an expression at position " + std::to_string(tok_.pos));
    }

    Polynomial resolve(const std::string& name, size_t pos) {
        if (name == "x") return Polynomial::variable(field_, Var::x);
        if (name == "y") return Polynomial::variable(field_, Var::y);
        if (name == "z") return Polynomial::variable(field_, Var::z);
        if (name == "w") {
            if (context_ == SlotContext::eta)
                fail(errc::unknown_variable, "'w' at position " + std::to_string(pos) +
                                                 ": an eta expression has only the slots x, y, t");
            return Polynomial::variable(field_, Var::w);
        }
        if (name == "t") {
            if (context_ != SlotContext::eta)
                fail(errc::unknown_variable,
                     "'t' at position " + std::to_string(pos) +
                         " is only meaningful inside an eta slot expression");
            return Polynomial::variable(field_, Var::z);
        }
        if (name.size() == 2 && name[0] == 'g' && name[1] >= '1' && name[1] <= '4') {
            if (context_ != SlotContext::gamma)
                fail(errc::unknown_variable,
                     "'" + name + "' at position " + std::to_string(pos) +
                         " is only meaningful inside a gamma slot expression");
            return Polynomial::variable(field_, static_cast<Var>(name[1] - '1'));
        }
        if (name == "g") {
            if (field_->degree() < 2)
                fail(errc::field_mismatch, "'g' at position " + std::to_string(pos) +
                                               ": GF(2) admits only the constants 0 and 1");
            return Polynomial::constant(field_, 0b10);
        }
        fail(errc::unknown_variable,
             "unknown identifier '" + name + "' at position " + std::to_string(pos));
    }

    Lexer lexer_;
    Field field_;
    SlotContext context_;
    Token tok_{Token::end, "", 0};
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Field& f, SlotContext context) {
    return PolyParser(text, f, context).parse();
}

Field parse_field_tag(std::string_view tag) {
    tag = trim(tag);
    if (tag == "gf2") return gf2();
    constexpr std::string_view prefix = "gf2^";
    if (tag.substr(0, prefix.size()) != prefix)
        fail(errc::bad_field_spec, "unrecognized field tag '" + std::string(tag) +
                                       "' (expected gf2 or gf2^m:bits)");
    std::string_view rest = tag.substr(prefix.size());
    const size_t colon = rest.find(':');
    if (colon == std::string_view::npos || colon == 0)
        fail(errc::bad_field_spec, "field tag '" + std::string(tag) +
                                       "' is missing the :bits modulus");
    unsigned m = 0;
    for (const char c : rest.substr(0, colon)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(errc::bad_field_spec, "invalid extension degree in '" + std::string(tag) + "'");
        m = m * 10 + static_cast<unsigned>(c - '0');
        if (m > 16) fail(errc::bad_field_spec, "extension degree must be between 1 and 16");
    }
    const std::string_view bits = rest.substr(colon + 1);
    if (bits.size() != m + 1)
        fail(errc::bad_field_spec, "the modulus of gf2^" + std::to_string(m) + " needs exactly " +
                                       std::to_string(m + 1) + " bits");
    uint32_t modulus = 0;
    for (const char c : bits) {
        if (c != '0' && c != '1')
            fail(errc::bad_field_spec, "modulus bits must be 0 or 1 in '" + std::string(tag) + "'");
        modulus = (modulus << 1) | static_cast<uint32_t>(c - '0');
    }
    return make_field(m, modulus);
}

MapSource read_map_source(std::string_view text) {
    MapSource source;
    size_t line_start = 0;
    while (line_start <= text.size()) {
        const size_t newline = text.find('\n', line_start);
        std::string_view line = text.substr(
            line_start, newline == std::string_view::npos ? std::string_view::npos
                                                          : newline - line_start);
        const size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);

        size_t piece_start = 0;
        while (piece_start <= line.size()) {
            const size_t semi = line.find(';', piece_start);
            std::string_view piece = trim(line.substr(
                piece_start,
                semi == std::string_view::npos ? std::string_view::npos : semi - piece_start));
            if (!piece.empty()) {
                constexpr std::string_view field_key = "field:";
                if (piece.substr(0, field_key.size()) == field_key) {
                    if (!source.field_tag.empty())
                        fail(errc::duplicate_assignment, "the field is named more than once");
                    source.field_tag = std::string(trim(piece.substr(field_key.size())));
                    if (source.field_tag.empty())
                        fail(errc::bad_field_spec, "empty field tag");
                } else {
                    const size_t arrow = piece.find("->");
                    if (arrow == std::string_view::npos)
                        fail(errc::syntax_error, "expected 'variable -> expression' in '" +
                                                     std::string(piece) + "'");
                    source.assignments.emplace_back(std::string(trim(piece.substr(0, arrow))),
                                                    std::string(trim(piece.substr(arrow + 2))));
                }
            }
            if (semi == std::string_view::npos) break;
            piece_start = semi + 1;
        }

        if (newline == std::string_view::npos) break;
        line_start = newline + 1;
    }
    return source;
}

PolyMap parse_map(const MapSource& source, const Field& fallback_field) {
    const Field f =
        source.field_tag.empty() ? fallback_field : parse_field_tag(source.field_tag);
    std::array<std::optional<Polynomial>, 4> images;
    for (const auto& [lhs, rhs] : source.assignments) {
        int v = -1;
        for (int i = 0; i < 4; ++i) {
            if (lhs == xyzw_names()[i]) v = i;
        }
        if (v < 0)
            fail(errc::unknown_variable, "cannot assign to '" + lhs + "' (expected x, y, z or w)");
        if (images[v]) fail(errc::duplicate_assignment, "variable " + lhs + " is assigned twice");
        images[v] = parse_poly(rhs, f);
    }
    for (int i = 0; i < 4; ++i) {
        if (!images[i])
            fail(errc::missing_variable, "no assignment for " + xyzw_names()[i]);
    }
    return PolyMap(f, {std::move(*images[0]), std::move(*images[1]), std::move(*images[2]),
                       std::move(*images[3])});
}

PolyMap parse_map(std::string_view text, const Field& fallback_field) {
    return parse_map(read_map_source(text), fallback_field);
}

}  // namespace trinv
