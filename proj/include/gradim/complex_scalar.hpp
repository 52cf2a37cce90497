#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "gradim/errors.hpp"

namespace gradim {

/// std::complex<double> with finite-result checking and tolerant comparison.
/// Equality holds when |a - b| <= 1e-9 * max(1, |a|, |b|).
struct ComplexScalar {
    static constexpr double kTol = 1e-9;

    std::complex<double> v{0.0, 0.0};

    ComplexScalar() = default;
    ComplexScalar(double re, double im = 0.0) : v(re, im) { check(); }
    ComplexScalar(const std::complex<double>& z) : v(z) { check(); }

    void check() const {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NonFiniteError("non-finite complex value");
    }

    double abs() const { return std::abs(v); }

    ComplexScalar operator+(const ComplexScalar& o) const { return ComplexScalar(v + o.v); }
    ComplexScalar operator-(const ComplexScalar& o) const { return ComplexScalar(v - o.v); }
    ComplexScalar operator-() const { return ComplexScalar(-v); }
    ComplexScalar operator*(const ComplexScalar& o) const { return ComplexScalar(v * o.v); }
    ComplexScalar operator/(const ComplexScalar& o) const {
        if (o.abs() == 0.0) throw DivisionByZeroError("complex division by zero");
        return ComplexScalar(v / o.v);
    }
    ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
    ComplexScalar& operator-=(const ComplexScalar& o) { return *this = *this - o; }
    ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }
    ComplexScalar& operator/=(const ComplexScalar& o) { return *this = *this / o; }

    bool operator==(const ComplexScalar& o) const {
        double scale = std::max({1.0, abs(), o.abs()});
        return std::abs(v - o.v) <= kTol * scale;
    }
    bool operator!=(const ComplexScalar& o) const { return !(*this == o); }

    /// "re+im*i" with shortest round-trip formatting of both parts.
    std::string str() const;
    static ComplexScalar from_string(std::string_view s);
};

/// Shortest decimal form of x that parses back to exactly x.
std::string format_double(double x);

}  // namespace gradim
