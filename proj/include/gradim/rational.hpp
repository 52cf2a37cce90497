#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "gradim/errors.hpp"

namespace gradim {

// Expression templates are disabled so that arithmetic yields values of the
// named type itself; the generic scalar code relies on that.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// Canonical form "p/q" with q > 0 and gcd(p, q) = 1.
std::string rational_to_string(const Rational& q);

/// Accepts "p" or "p/q", with optional sign and surrounding whitespace.
Rational rational_from_string(std::string_view s);

double rational_to_double(const Rational& q);

Rational rational_pow(const Rational& base, long long e);

/// w = root^2 * radicand with radicand squarefree (sign kept on radicand).
/// `complete` is false when a cofactor beyond the trial-division bound could
/// not be certified squarefree; callers must then treat the split as unusable.
struct SquarefreeSplit {
    BigInt root;
    BigInt radicand;
    bool complete;
};
SquarefreeSplit squarefree_split(BigInt w, unsigned long trial_limit = 1000000);

/// Exact square root in Q, or nullopt when q is not a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace gradim
