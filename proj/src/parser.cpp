#include "freecurve/parser.hpp"

#include <cctype>

#include "freecurve/errors.hpp"

namespace freecurve {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const FieldId& field) : text_(text), field_(field) {}

    Poly parse() {
        Poly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& why) { throw ParseError(pos_, why); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly expression() {
        bool negate = false;
        skip_ws();
        if (eat('-')) negate = true;
        else
            eat('+');
        Poly acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (eat('^')) {
            unsigned e = integer_literal();
            return base.pow(e);
        }
        return base;
    }

    unsigned integer_literal() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an exponent");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > (1ul << 31)) fail("exponent too large");
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::variable(field_, 0);
        }
        if (c == 'y') {
            ++pos_;
            return Poly::variable(field_, 1);
        }
        if (c == 'z') {
            ++pos_;
            return Poly::variable(field_, 2);
        }
        if (c == 'i') {
            if (field_.kind != FieldKind::QI) fail("the imaginary unit needs --field qi");
            ++pos_;
            return Poly::constant(Scalar::imaginary_unit());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unknown variable '") + c + "'");
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly number() {
        mpz_class num = digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a denominator");
            mpz_class den = digits();
            if (den == 0) fail("zero denominator");
            if (field_.kind == FieldKind::Fp) {
                Scalar v = Scalar::fp(field_, num) / Scalar::fp(field_, den);
                return Poly::constant(v);
            }
            Scalar v = field_.kind == FieldKind::QI ? Scalar::gaussian(mpq_class(num, den), 0)
                                                    : Scalar::rational(num, den);
            return Poly::constant(v);
        }
        if (field_.kind == FieldKind::Fp) return Poly::constant(Scalar::fp(field_, num));
        Scalar v = field_.kind == FieldKind::QI ? Scalar::gaussian(mpq_class(num), 0)
                                                : Scalar::rational(mpq_class(num));
        return Poly::constant(v);
    }

    mpz_class digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += text_[pos_++];
        return mpz_class(s);
    }

    const std::string& text_;
    FieldId field_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const FieldId& field) { return Parser(text, field).parse(); }

Scalar parse_scalar(const std::string& text, const FieldId& field) {
    Poly p = parse_poly(text, field);
    if (!p.is_constant()) throw ParseError(0, "expected a constant expression");
    return p.is_zero() ? Scalar::zero(field) : p.leading_term().c;
}

std::array<Scalar, 3> parse_point(const std::string& text, const FieldId& field) {
    std::string trimmed = text;
    auto strip = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };
    trimmed = strip(trimmed);
    if (trimmed.size() < 2 || trimmed.front() != '(' || trimmed.back() != ')')
        throw ParseError(0, "expected a point of the form (a, b, c)");
    std::string inner = trimmed.substr(1, trimmed.size() - 2);
    std::array<std::string, 3> parts;
    int depth = 0;
    std::size_t part = 0;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ',' || c == ':') && depth == 0) {
            if (++part > 2) throw ParseError(0, "too many coordinates");
            continue;
        }
        parts[part] += c;
    }
    if (part != 2) throw ParseError(0, "expected three coordinates");
    return {parse_scalar(parts[0], field), parse_scalar(parts[1], field), parse_scalar(parts[2], field)};
}

}  // namespace freecurve
