#pragma once

#include <string>
#include <vector>

#include "gradim/rational.hpp"

namespace gradim {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
/// vector never ends in a zero, and the zero polynomial has no coefficients.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int degree, const Rational& c = 1);
    /// x^n - 1
    static UniPoly x_pow_minus_one(int n);

    bool is_zero() const { return c_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    struct DivMod;
    DivMod divmod(const UniPoly& divisor) const;
    /// Division with the precondition that the remainder is zero; throws
    /// otherwise.
    UniPoly div_exact(const UniPoly& divisor) const;

    UniPoly monic() const;
    Rational eval(const Rational& x) const;
    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Rational> c_;
    void trim();
};

struct UniPoly::DivMod {
    UniPoly quot;
    UniPoly rem;
};

/// Monic gcd via the Euclidean algorithm. gcd(0, 0) = 0.
UniPoly unipoly_gcd(UniPoly a, UniPoly b);

/// g = s*a + t*b with g the monic gcd.
struct ExtendedGcd {
    UniPoly g, s, t;
};
ExtendedGcd unipoly_xgcd(UniPoly a, UniPoly b);

/// The m-th cyclotomic polynomial, computed by dividing x^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m. Memoized.
const UniPoly& cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

}  // namespace gradim
