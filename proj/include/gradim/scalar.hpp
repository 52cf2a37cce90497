#pragma once

#include <concepts>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gradim/complex_scalar.hpp"
#include "gradim/cyclotomic.hpp"
#include "gradim/rational.hpp"

namespace gradim {

/// Uniform access to the scalar backends. `exact` distinguishes the symbolic
/// fields from the floating backend; generic algorithms branch on it when an
/// exact decision is required.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long v) { return Rational(v); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static Rational inverse(const Rational& a) {
        if (a == 0) throw DivisionByZeroError("inverse of zero");
        return Rational(1) / a;
    }
    static std::optional<Rational> sqrt(const Rational& a) { return rational_sqrt(a); }
    static Rational div_exact(const Rational& a, const Rational& b) {
        if (b == 0) throw DivisionByZeroError("division by zero");
        return a / b;
    }
    static std::string str(const Rational& a) { return rational_to_string(a); }
    static Rational parse(std::string_view s) { return rational_from_string(s); }
    static std::complex<double> to_complex(const Rational& a) {
        return {rational_to_double(a), 0.0};
    }
};

template <>
struct scalar_traits<Cyclo> {
    static constexpr bool exact = true;
    static constexpr const char* name = "cyclotomic";
    static Cyclo zero() { return Cyclo(Rational(0)); }
    static Cyclo one() { return Cyclo(Rational(1)); }
    static Cyclo from_int(long long v) { return Cyclo(Rational(v)); }
    static Cyclo from_rational(const Rational& q) { return Cyclo(q); }
    static bool is_zero(const Cyclo& a) { return a.is_zero(); }
    static bool equal(const Cyclo& a, const Cyclo& b) { return a == b; }
    static Cyclo inverse(const Cyclo& a) { return a.inverse(); }
    static Cyclo div_exact(const Cyclo& a, const Cyclo& b) { return a / b; }
    static std::optional<Cyclo> sqrt(const Cyclo& a) { return cyclo_sqrt(a); }
    static std::string str(const Cyclo& a) { return a.str(); }
    static Cyclo parse(std::string_view s) { return Cyclo::from_string(s); }
    static std::complex<double> to_complex(const Cyclo& a) { return a.to_complex(); }
};

template <>
struct scalar_traits<ComplexScalar> {
    static constexpr bool exact = false;
    static constexpr const char* name = "complex";
    static ComplexScalar zero() { return ComplexScalar(0.0); }
    static ComplexScalar one() { return ComplexScalar(1.0); }
    static ComplexScalar from_int(long long v) { return ComplexScalar(static_cast<double>(v)); }
    static ComplexScalar from_rational(const Rational& q) {
        return ComplexScalar(rational_to_double(q));
    }
    static bool is_zero(const ComplexScalar& a) { return a.abs() <= ComplexScalar::kTol; }
    static bool equal(const ComplexScalar& a, const ComplexScalar& b) { return a == b; }
    static ComplexScalar inverse(const ComplexScalar& a) {
        if (is_zero(a)) throw DivisionByZeroError("inverse of (numerically) zero");
        return ComplexScalar(1.0) / a;
    }
    static ComplexScalar div_exact(const ComplexScalar& a, const ComplexScalar& b) {
        return a / b;
    }
    static std::optional<ComplexScalar> sqrt(const ComplexScalar& a) {
        return ComplexScalar(std::sqrt(a.v));
    }
    static std::string str(const ComplexScalar& a) { return a.str(); }
    static ComplexScalar parse(std::string_view s) { return ComplexScalar::from_string(s); }
    static std::complex<double> to_complex(const ComplexScalar& a) { return a.v; }
};

template <class S>
concept Scalar = requires(const S a, const S b) {
    { scalar_traits<S>::zero() } -> std::convertible_to<S>;
    { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
    { scalar_traits<S>::inverse(a) } -> std::convertible_to<S>;
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
};

template <class S>
S scalar_pow(const S& base, long long e) {
    if (e < 0) return scalar_pow(scalar_traits<S>::inverse(base), -e);
    S acc = scalar_traits<S>::one();
    S b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

/// A primitive m-th root of unity in backend S. Rational supports m in {1, 2};
/// Cyclo returns zeta_m; ComplexScalar returns exp(2 pi i / m).
template <class S>
S primitive_root_of_unity(unsigned m);

template <>
inline Rational primitive_root_of_unity<Rational>(unsigned m) {
    if (m == 1) return Rational(1);
    if (m == 2) return Rational(-1);
    throw Error("no primitive root of unity of order " + std::to_string(m) + " in Q");
}

template <>
inline Cyclo primitive_root_of_unity<Cyclo>(unsigned m) {
    return Cyclo::zeta(m);
}

template <>
inline ComplexScalar primitive_root_of_unity<ComplexScalar>(unsigned m) {
    if (m == 0) throw Error("root of unity of order 0");
    double theta = 6.283185307179586476925286766559 / static_cast<double>(m);
    return ComplexScalar(std::cos(theta), std::sin(theta));
}

/// Least k in [1, bound] with a^k = 1, or nullopt. For the exact backends a
/// bound of lcm(2, field order) is always sufficient, so the answer is exact
/// whenever bound reaches it; for ComplexScalar the answer is advisory
/// (tolerance 1e-9). bound = 0 picks a backend default.
template <class S>
std::optional<unsigned> root_of_unity_order(const S& a, unsigned bound = 0);

template <>
inline std::optional<unsigned> root_of_unity_order<Rational>(const Rational& a, unsigned) {
    if (a == 1) return 1;
    if (a == -1) return 2;
    return std::nullopt;
}

template <>
inline std::optional<unsigned> root_of_unity_order<Cyclo>(const Cyclo& a, unsigned bound) {
    if (a.is_zero()) return std::nullopt;
    unsigned m = a.order();
    unsigned cap = m % 2 == 0 ? m : 2 * m;  // the roots of unity in Q(zeta_m) are +-zeta^j
    if (bound == 0 || bound > cap) bound = cap;
    Cyclo p = scalar_traits<Cyclo>::one();
    for (unsigned k = 1; k <= bound; ++k) {
        p *= a;
        if (p == scalar_traits<Cyclo>::one()) return k;
    }
    return std::nullopt;
}

template <>
inline std::optional<unsigned> root_of_unity_order<ComplexScalar>(const ComplexScalar& a,
                                                                 unsigned bound) {
    if (bound == 0) bound = 128;
    if (std::abs(a.abs() - 1.0) > ComplexScalar::kTol) return std::nullopt;
    ComplexScalar p = scalar_traits<ComplexScalar>::one();
    for (unsigned k = 1; k <= bound; ++k) {
        p *= a;
        if (p == scalar_traits<ComplexScalar>::one()) return k;
    }
    return std::nullopt;
}

/// Roots of a x^2 + b x + c in the backend. `complete` reports whether the
/// returned list is provably all of the in-field roots; the exact backends
/// set it false when the field membership of sqrt(disc) could not be decided.
/// All coefficients zero is an error (every scalar is a root).
template <class S>
struct QuadraticRoots {
    std::vector<S> roots;
    bool complete = true;
};

template <class S>
QuadraticRoots<S> solve_quadratic(const S& a, const S& b, const S& c);

namespace detail {

template <class S>
void push_unique(std::vector<S>& v, const S& x) {
    for (const S& y : v)
        if (scalar_traits<S>::equal(y, x)) return;
    v.push_back(x);
}

template <class S>
QuadraticRoots<S> solve_linear(const S& b, const S& c) {
    using T = scalar_traits<S>;
    if (T::is_zero(b)) {
        if (T::is_zero(c))
            throw DegenerateAllZeroError("all quadratic coefficients are zero");
        return {{}, true};
    }
    return {{-c * T::inverse(b)}, true};
}

}  // namespace detail

template <Scalar S>
QuadraticRoots<S> solve_quadratic_generic(const S& a, const S& b, const S& c) {
    using T = scalar_traits<S>;
    if (T::is_zero(a)) return detail::solve_linear(b, c);
    S disc = b * b - T::from_int(4) * a * c;
    QuadraticRoots<S> out;
    S inv2a = T::inverse(T::from_int(2) * a);
    if (auto sq = T::sqrt(disc)) {
        detail::push_unique(out.roots, (-b + *sq) * inv2a);
        detail::push_unique(out.roots, (-b - *sq) * inv2a);
        out.complete = true;
        return out;
    }
    out.complete = false;
    return out;
}

template <>
inline QuadraticRoots<Rational> solve_quadratic<Rational>(const Rational& a, const Rational& b,
                                                          const Rational& c) {
    // sqrt in Q is fully decidable: a quadratic has rational roots exactly
    // when its discriminant is a rational square, so the answer is always
    // complete here.
    QuadraticRoots<Rational> out = solve_quadratic_generic(a, b, c);
    out.complete = true;
    return out;
}

/// Cyclotomic solve with an explicit ambient field Q(zeta_ambient): roots are
/// searched in Q(zeta_l) for l = lcm(ambient, coefficient orders). Needed
/// because rational coefficients carry no trace of the configured field.
inline QuadraticRoots<Cyclo> solve_quadratic_cyclo(const Cyclo& a, const Cyclo& b, const Cyclo& c,
                                                   unsigned ambient_order) {
    using T = scalar_traits<Cyclo>;
    if (T::is_zero(a)) return detail::solve_linear(b, c);
    unsigned m = std::max(1u, ambient_order);
    for (unsigned o : {a.order(), b.order(), c.order()}) m = m / std::gcd(m, o) * o;
    Cyclo disc = b * b - T::from_int(4) * a * c;
    QuadraticRoots<Cyclo> out;
    Cyclo inv2a = T::inverse(T::from_int(2) * a);
    if (auto sq = cyclo_sqrt(disc, m)) {
        detail::push_unique(out.roots, (-b + *sq) * inv2a);
        detail::push_unique(out.roots, (-b - *sq) * inv2a);
        out.complete = true;
        return out;
    }
    // Root-of-unity scan: if one root is +-zeta^j the other follows by Vieta.
    for (unsigned j = 0; j < m; ++j) {
        Cyclo x = Cyclo::zeta_power(m, j);
        for (int sgn = 0; sgn < 2; ++sgn) {
            Cyclo cand = sgn ? -x : x;
            if (T::is_zero(a * cand * cand + b * cand + c)) {
                detail::push_unique(out.roots, cand);
                if (!T::is_zero(cand)) {
                    Cyclo other = c * T::inverse(a) * T::inverse(cand);
                    detail::push_unique(out.roots, other);
                }
                out.complete = true;
                return out;
            }
        }
    }
    out.complete = false;
    return out;
}

template <>
inline QuadraticRoots<Cyclo> solve_quadratic<Cyclo>(const Cyclo& a, const Cyclo& b,
                                                    const Cyclo& c) {
    return solve_quadratic_cyclo(a, b, c, 1);
}

/// Backend-generic entry point that forwards an ambient cyclotomic order
/// where it is meaningful and ignores it elsewhere.
template <Scalar S>
QuadraticRoots<S> solve_quadratic_in(const S& a, const S& b, const S& c, unsigned /*ambient*/) {
    return solve_quadratic(a, b, c);
}

template <>
inline QuadraticRoots<Cyclo> solve_quadratic_in<Cyclo>(const Cyclo& a, const Cyclo& b,
                                                       const Cyclo& c, unsigned ambient) {
    return solve_quadratic_cyclo(a, b, c, ambient);
}

template <>
inline QuadraticRoots<ComplexScalar> solve_quadratic<ComplexScalar>(const ComplexScalar& a,
                                                                    const ComplexScalar& b,
                                                                    const ComplexScalar& c) {
    using T = scalar_traits<ComplexScalar>;
    if (T::is_zero(a)) return detail::solve_linear(b, c);
    std::complex<double> disc = b.v * b.v - 4.0 * a.v * c.v;
    std::complex<double> sq = std::sqrt(disc);
    // Avoid cancellation: fold the sqrt into the larger of -b +- sq.
    std::complex<double> q =
        std::abs(-b.v + sq) >= std::abs(-b.v - sq) ? (-b.v + sq) / 2.0 : (-b.v - sq) / 2.0;
    QuadraticRoots<ComplexScalar> out;
    if (std::abs(q) == 0.0) {
        detail::push_unique(out.roots, ComplexScalar(0.0));
    } else {
        detail::push_unique(out.roots, ComplexScalar(q / a.v));
        detail::push_unique(out.roots, ComplexScalar(c.v / q));
    }
    out.complete = true;
    return out;
}

}  // namespace gradim
