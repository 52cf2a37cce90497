#include "gradim/rational.hpp"

#include <cctype>

namespace gradim {

std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    s = s.substr(b, e - b);
    if (s.empty()) throw Error("empty rational literal");

    auto parse_int = [](std::string_view t) -> BigInt {
        if (t.empty()) throw Error("empty integer literal");
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = (t[0] == '-');
            i = 1;
        }
        if (i == t.size()) throw Error("sign without digits in integer literal");
        BigInt v = 0;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw Error("invalid digit in integer literal: " + std::string(t));
            v = v * 10 + (t[i] - '0');
        }
        return neg ? -v : v;
    };

    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DivisionByZeroError("zero denominator in rational literal");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

Rational rational_pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw DivisionByZeroError("0 raised to a negative power");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational acc = 1, b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

SquarefreeSplit squarefree_split(BigInt w, unsigned long trial_limit) {
    if (w == 0) return {0, 0, true};
    SquarefreeSplit out{1, 1, true};
    if (w < 0) {
        out.radicand = -1;
        w = -w;
    }
    for (BigInt p = 2; p <= trial_limit && p * p <= w; p += (p == 2 ? 1 : 2)) {
        if (w % p != 0) continue;
        int mult = 0;
        while (w % p == 0) {
            w /= p;
            ++mult;
        }
        for (int i = 0; i + 1 < mult; i += 2) out.root *= p;
        if (mult % 2) out.radicand *= p;
    }
    if (w > 1) {
        // Cofactor with no prime factor below the bound: either prime, or a
        // perfect square of a prime, or beyond certification.
        BigInt r = sqrt(w);
        if (r * r == w) {
            out.root *= r;
        } else if (w <= BigInt(trial_limit) * trial_limit) {
            out.radicand *= w;  // no factor <= sqrt(w), hence prime
        } else {
            out.radicand *= w;
            out.complete = false;
        }
    }
    return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    BigInt n = numerator(q), d = denominator(q);
    BigInt rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace gradim
