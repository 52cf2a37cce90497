#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradim/unipoly.hpp"

namespace gradim {

/// Immutable description of Q(zeta_m) on the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial.
/// Instances are interned; pointer equality means field equality.
class CyclotomicField {
  public:
    static const CyclotomicField* get(unsigned m);

    unsigned order() const { return m_; }
    unsigned degree() const { return deg_; }
    const UniPoly& modulus() const { return phi_; }

    /// Reduces an arbitrary coefficient vector (coefficient of zeta^i at
    /// index i) to canonical power-basis form of length degree().
    std::vector<Rational> reduce(const std::vector<Rational>& raw) const;

  private:
    explicit CyclotomicField(unsigned m);
    unsigned m_;
    unsigned deg_;
    UniPoly phi_;
    // zeta^k mod Phi_m for k in [deg_, 2*deg_ - 1], used by products.
    std::vector<std::vector<Rational>> high_powers_;
};

/// Element of a cyclotomic field. Rational numbers live in the order-1 field;
/// binary operations promote along field inclusions Q(zeta_d) < Q(zeta_m)
/// for d | m and reject incomparable orders.
class Cyclo {
  public:
    Cyclo() : Cyclo(Rational(0)) {}
    Cyclo(const Rational& q);
    Cyclo(long long v) : Cyclo(Rational(v)) {}
    Cyclo(unsigned m, std::vector<Rational> coeffs);

    /// zeta_m, a primitive m-th root of unity.
    static Cyclo zeta(unsigned m);
    static Cyclo zeta_power(unsigned m, long long k);

    unsigned order() const { return field_->order(); }
    const CyclotomicField* field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws when the element is not rational.
    Rational as_rational() const;

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo inverse() const;
    Cyclo pow(long long e) const;

    /// Reinterprets the element inside Q(zeta_m); requires order() | m.
    Cyclo embedded(unsigned m) const;

    std::complex<double> to_complex() const;

    /// "[a0,a1,...]@zeta_m" with rational entries on the power basis.
    std::string str() const;
    static Cyclo from_string(std::string_view s);

  private:
    const CyclotomicField* field_;
    std::vector<Rational> c_;
    static std::pair<Cyclo, Cyclo> aligned(const Cyclo& a, const Cyclo& b);
};

/// Square root inside Q(zeta_l) for l = lcm(order of a, ambient_order),
/// handling the two shapes that arise from quadratic discriminants here:
/// rational values (via quadratic Gauss sums, when the conductor of Q(sqrt d)
/// divides l) and rational multiples of a power of zeta. Returns nullopt when
/// no root is found; a nullopt does not certify non-existence for the mixed
/// shapes.
std::optional<Cyclo> cyclo_sqrt(const Cyclo& a, unsigned ambient_order = 1);

/// sqrt of the squarefree integer d as an element of Q(zeta_m), or nullopt
/// when the conductor test rules it out (that direction is exact).
std::optional<Cyclo> cyclo_sqrt_squarefree_int(const BigInt& d, unsigned m);

}  // namespace gradim
