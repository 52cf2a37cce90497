#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "gradim/graded_poly.hpp"

namespace gradim {

/// Backend hooks for coefficient atoms in polynomial text. Atoms a backend
/// cannot represent raise UnsupportedCoefficientError.
template <Scalar S>
struct coeff_builder;

template <>
struct coeff_builder<Rational> {
    static Rational from_rational(const Rational& q, std::size_t) { return q; }
    static Rational zeta(long long m, long long k, std::size_t pos) {
        if (m == 1) return Rational(1);
        if (m == 2) return k % 2 == 0 ? Rational(1) : Rational(-1);
        throw UnsupportedCoefficientError(
            "zeta" + std::to_string(m) + " is not a rational number; use a cyclotomic or complex backend",
            pos);
    }
    static Rational imaginary(std::size_t pos) {
        throw UnsupportedCoefficientError("'i' requires the complex backend", pos);
    }
};

template <>
struct coeff_builder<Cyclo> {
    static Cyclo from_rational(const Rational& q, std::size_t) { return Cyclo(q); }
    static Cyclo zeta(long long m, long long k, std::size_t) {
        return Cyclo::zeta_power(static_cast<unsigned>(m), k);
    }
    static Cyclo imaginary(std::size_t) { return Cyclo::zeta_power(4, 1); }
};

template <>
struct coeff_builder<ComplexScalar> {
    static ComplexScalar from_rational(const Rational& q, std::size_t) {
        return ComplexScalar(rational_to_double(q));
    }
    static ComplexScalar zeta(long long m, long long k, std::size_t) {
        double theta = 6.283185307179586476925286766559 * static_cast<double>(k) /
                       static_cast<double>(m);
        return ComplexScalar(std::cos(theta), std::sin(theta));
    }
    static ComplexScalar imaginary(std::size_t) { return ComplexScalar(0.0, 1.0); }
};

namespace detail {

enum class Tok {
    KwDeg,
    Var,       // x<digits>
    Zeta,      // zeta<digits>
    Imag,      // i
    Number,    // rational literal, decimals folded exactly
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Assign,
    Semi,
    End,
};

struct Token {
    Tok kind;
    std::size_t pos;
    Rational num;       // Number
    long long ival = 0; // Var id / Zeta order
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            std::size_t pos = i_;
            if (i_ >= text_.size()) {
                out.push_back({Tok::End, pos, {}, 0});
                return out;
            }
            char c = text_[i_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(number(pos));
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(word(pos));
            } else {
                ++i_;
                switch (c) {
                    case '+': out.push_back({Tok::Plus, pos, {}, 0}); break;
                    case '-': out.push_back({Tok::Minus, pos, {}, 0}); break;
                    case '*': out.push_back({Tok::Star, pos, {}, 0}); break;
                    case '^': out.push_back({Tok::Caret, pos, {}, 0}); break;
                    case '(': out.push_back({Tok::LParen, pos, {}, 0}); break;
                    case ')': out.push_back({Tok::RParen, pos, {}, 0}); break;
                    case '=': out.push_back({Tok::Assign, pos, {}, 0}); break;
                    case ';': out.push_back({Tok::Semi, pos, {}, 0}); break;
                    default:
                        throw ParseError(std::string("unexpected character '") + c + "'", pos);
                }
            }
        }
    }

  private:
    std::string_view text_;
    std::size_t i_ = 0;

    void skip_ws() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    }

    long long digits() {
        long long v = 0;
        std::size_t start = i_;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
            v = v * 10 + (text_[i_] - '0');
            if (v > (1LL << 56)) throw ParseError("integer literal too large", start);
            ++i_;
        }
        return v;
    }

    Token number(std::size_t pos) {
        // INT [ "/" INT ] | decimal float; both converted exactly.
        BigInt ip = 0;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
            ip = ip * 10 + (text_[i_++] - '0');
        Rational value(ip);
        bool is_float = false;
        if (i_ < text_.size() && text_[i_] == '.') {
            is_float = true;
            ++i_;
            BigInt frac = 0, scale = 1;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                frac = frac * 10 + (text_[i_++] - '0');
                scale *= 10;
            }
            value += Rational(frac, scale);
        }
        if (i_ + 1 < text_.size() && (text_[i_] == 'e' || text_[i_] == 'E') &&
            (std::isdigit(static_cast<unsigned char>(text_[i_ + 1])) || text_[i_ + 1] == '+' ||
             text_[i_ + 1] == '-')) {
            is_float = true;
            ++i_;
            bool neg = false;
            if (text_[i_] == '+' || text_[i_] == '-') neg = (text_[i_++] == '-');
            long long e = digits();
            Rational p = rational_pow(Rational(10), neg ? -e : e);
            value *= p;
        }
        if (!is_float && i_ < text_.size() && text_[i_] == '/' && i_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
            ++i_;
            BigInt den = 0;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                den = den * 10 + (text_[i_++] - '0');
            if (den == 0) throw ParseError("zero denominator", pos);
            value /= Rational(den);
        }
        return {Tok::Number, pos, value, 0};
    }

    Token word(std::size_t pos) {
        std::size_t start = i_;
        while (i_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::string_view w = text_.substr(start, i_ - start);
        if (w == "deg") return {Tok::KwDeg, pos, {}, 0};
        if (w == "i") return {Tok::Imag, pos, {}, 0};
        if (w == "x") {
            if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
                throw ParseError("variable name needs an index, e.g. x1", pos);
            long long id = digits();
            if (id < 1) throw DegreeOutOfRangeError("variable indices start at 1", pos);
            return {Tok::Var, pos, {}, id};
        }
        if (w == "zeta") {
            if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
                throw ParseError("zeta needs an order, e.g. zeta3", pos);
            long long m = digits();
            if (m < 1) throw DegreeOutOfRangeError("root of unity order must be positive", pos);
            return {Tok::Zeta, pos, {}, m};
        }
        throw ParseError("unknown word '" + std::string(w) + "'", pos);
    }
};

template <Scalar S>
class Parser {
  public:
    Parser(std::string_view text, int modulus)
        : toks_(Lexer(text).run()), modulus_(modulus), poly_(modulus) {}

    GradedPolynomial<S> run() {
        while (peek().kind == Tok::KwDeg) declaration();
        GradedPolynomial<S> body = polynomial();
        expect(Tok::End, "trailing input after polynomial");
        for (const auto& m : body.monomials()) poly_.add_term(m.coeff, m.word);
        return poly_;
    }

  private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    int modulus_;
    GradedPolynomial<S> poly_;

    const Token& peek(std::size_t k = 0) const {
        return toks_[std::min(at_ + k, toks_.size() - 1)];
    }
    const Token& take() { return toks_[std::min(at_++, toks_.size() - 1)]; }
    void expect(Tok k, const char* msg) {
        if (peek().kind != k) throw ParseError(msg, peek().pos);
        take();
    }

    void declaration() {
        take();  // deg
        if (peek().kind != Tok::Var) throw ParseError("expected variable after 'deg'", peek().pos);
        long long id = take().ival;
        expect(Tok::Assign, "expected '=' in degree declaration");
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            neg = true;
            take();
        }
        if (peek().kind != Tok::Number || denominator(peek().num) != 1)
            throw ParseError("expected integer degree", peek().pos);
        long long d = numerator(take().num).template convert_to<long long>();
        expect(Tok::Semi, "expected ';' after degree declaration");
        poly_.declare(static_cast<int>(id), mod_index(neg ? -d : d, modulus_));
    }

    GradedPolynomial<S> polynomial() {
        GradedPolynomial<S> acc(modulus_);
        bool negate = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus)
            negate = take().kind == Tok::Minus;
        acc = term(negate);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool neg = take().kind == Tok::Minus;
            acc = acc + term(neg);
        }
        return acc;
    }

    // A term is a product of atoms: scalar atoms fold into the coefficient,
    // variable and parenthesized atoms multiply noncommutatively.
    GradedPolynomial<S> term(bool negate) {
        std::size_t term_pos = peek().pos;
        S coeff = scalar_traits<S>::one();
        if (negate) coeff = -coeff;
        std::optional<GradedPolynomial<S>> body;
        bool saw_atom = false;
        while (true) {
            switch (peek().kind) {
                case Tok::Number: {
                    const Token& t = take();
                    coeff = coeff * coeff_builder<S>::from_rational(t.num, t.pos);
                    saw_atom = true;
                    break;
                }
                case Tok::Zeta: {
                    const Token& t = take();
                    long long power = 1;
                    if (peek().kind == Tok::Caret) {
                        take();
                        bool neg = false;
                        if (peek().kind == Tok::Minus) {
                            neg = true;
                            take();
                        }
                        if (peek().kind != Tok::Number || denominator(peek().num) != 1)
                            throw ParseError("expected integer exponent after '^'", peek().pos);
                        power = numerator(take().num).template convert_to<long long>();
                        if (neg) power = -power;
                    }
                    coeff = coeff * coeff_builder<S>::zeta(t.ival, power, t.pos);
                    saw_atom = true;
                    break;
                }
                case Tok::Imag: {
                    const Token& t = take();
                    coeff = coeff * coeff_builder<S>::imaginary(t.pos);
                    saw_atom = true;
                    break;
                }
                case Tok::Var: {
                    const Token& t = take();
                    if (!poly_.is_declared(static_cast<int>(t.ival)))
                        throw UnknownVariableError(
                            "variable x" + std::to_string(t.ival) + " has no degree declaration",
                            t.pos);
                    GradedPolynomial<S> v(modulus_);
                    v.declare(static_cast<int>(t.ival),
                              poly_.degree_of(static_cast<int>(t.ival)));
                    v.add_term(scalar_traits<S>::one(), {static_cast<int>(t.ival)});
                    body = body ? poly_mul(*body, v) : v;
                    saw_atom = true;
                    break;
                }
                case Tok::LParen: {
                    take();
                    GradedPolynomial<S> sub = polynomial();
                    expect(Tok::RParen, "expected ')'");
                    body = body ? poly_mul(*body, sub) : sub;
                    saw_atom = true;
                    break;
                }
                default:
                    goto done;
            }
            if (peek().kind == Tok::Star) take();
        }
    done:
        if (!saw_atom) throw ParseError("expected a term", peek().pos);
        if (!body)
            throw ParseError("constant terms are not allowed: every term needs a variable",
                             term_pos);
        return body->scaled(coeff);
    }

    GradedPolynomial<S> poly_mul(const GradedPolynomial<S>& a, const GradedPolynomial<S>& b) {
        GradedPolynomial<S> r(modulus_);
        for (const auto& [id, deg] : a.variables()) r.declare(id, deg);
        for (const auto& [id, deg] : b.variables()) r.declare(id, deg);
        for (const auto& ma : a.monomials())
            for (const auto& mb : b.monomials()) {
                std::vector<int> w = ma.word;
                w.insert(w.end(), mb.word.begin(), mb.word.end());
                r.add_term(ma.coeff * mb.coeff, std::move(w));
            }
        return r;
    }
};

}  // namespace detail

/// Parses degree declarations followed by a polynomial; see the grammar in
/// the command-line documentation. Raises ParseError (with offset),
/// UnknownVariableError, DegreeOutOfRangeError, UnsupportedCoefficientError.
template <Scalar S>
GradedPolynomial<S> parse_polynomial(std::string_view text, int modulus) {
    return detail::Parser<S>(text, modulus).run();
}

/// Canonical text form of a polynomial: degree declarations in id order, then
/// monomials in canonical order with one printed piece per basis component of
/// each coefficient, so that parse(print(f)) == f over every backend.
template <Scalar S>
std::string print_polynomial(const GradedPolynomial<S>& f);

namespace detail {

inline void append_piece(std::string& out, bool& first, const std::string& piece) {
    if (first) {
        out += piece;
    } else if (!piece.empty() && piece[0] == '-') {
        out += " - " + piece.substr(1);
    } else {
        out += " + " + piece;
    }
    first = false;
}

template <Scalar S>
std::vector<std::string> coeff_pieces(const S& c);

template <>
inline std::vector<std::string> coeff_pieces<Rational>(const Rational& c) {
    return {rational_to_string(c)};
}

template <>
inline std::vector<std::string> coeff_pieces<Cyclo>(const Cyclo& c) {
    std::vector<std::string> out;
    const auto& v = c.coeffs();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        std::string piece = rational_to_string(v[k]);
        if (k > 0) piece += "*zeta" + std::to_string(c.order()) + "^" + std::to_string(k);
        out.push_back(piece);
    }
    return out;
}

template <>
inline std::vector<std::string> coeff_pieces<ComplexScalar>(const ComplexScalar& c) {
    std::vector<std::string> out;
    if (c.v.real() != 0.0 || c.v.imag() == 0.0) out.push_back(format_double(c.v.real()));
    if (c.v.imag() != 0.0) out.push_back(format_double(c.v.imag()) + "*i");
    return out;
}

}  // namespace detail

template <Scalar S>
std::string print_polynomial(const GradedPolynomial<S>& f) {
    std::string out;
    for (const auto& [id, deg] : f.variables())
        out += "deg x" + std::to_string(id) + " = " + std::to_string(deg) + "; ";
    if (f.is_zero()) {
        // No representable zero literal exists (constants are banned), so the
        // canonical form of zero subtracts a monomial from itself.
        if (f.variables().empty()) return out + "0";
        int id = f.variables().begin()->first;
        return out + "x" + std::to_string(id) + " - x" + std::to_string(id);
    }
    bool first = true;
    for (const auto& m : f.monomials()) {
        std::string word;
        for (std::size_t k = 0; k < m.word.size(); ++k)
            word += (k ? "*x" : "x") + std::to_string(m.word[k]);
        for (const std::string& piece : detail::coeff_pieces<S>(m.coeff))
            detail::append_piece(out, first, piece + "*" + word);
    }
    return out;
}

}  // namespace gradim
