#pragma once

#include <algorithm>

#include "gradim/graded_poly.hpp"
#include "gradim/rng.hpp"

namespace gradim {

/// Small random scalar: rationals with numerator in [-3, 3] and denominator
/// in [1, 3]; cyclotomic elements with small random coefficients in
/// Q(zeta_order); complex values uniform on [-1, 1]^2.
template <Scalar S>
S random_scalar(Rng& rng, unsigned cyclotomic_order = 1);

template <>
inline Rational random_scalar<Rational>(Rng& rng, unsigned) {
    return Rational(rng.int_in(-3, 3), rng.int_in(1, 3));
}

template <>
inline Cyclo random_scalar<Cyclo>(Rng& rng, unsigned order) {
    if (order <= 1) return Cyclo(random_scalar<Rational>(rng));
    std::vector<Rational> c(euler_phi(order));
    for (auto& q : c) q = Rational(rng.int_in(-3, 3));
    return Cyclo(order, std::move(c));
}

template <>
inline ComplexScalar random_scalar<ComplexScalar>(Rng& rng, unsigned) {
    return ComplexScalar(2.0 * rng.unit() - 1.0, 2.0 * rng.unit() - 1.0);
}

template <Scalar S>
S random_nonzero_scalar(Rng& rng, unsigned cyclotomic_order = 1) {
    for (int guard = 0; guard < 1000; ++guard) {
        S s = random_scalar<S>(rng, cyclotomic_order);
        if (!scalar_traits<S>::is_zero(s)) return s;
    }
    return scalar_traits<S>::one();
}

template <Scalar S>
HomogeneousMatrix<S> random_homogeneous(Rng& rng, int n, int g, unsigned cyclotomic_order = 1) {
    HomogeneousMatrix<S> m(n, g);
    for (int i = 1; i <= n; ++i) m.gamma(i) = random_scalar<S>(rng, cyclotomic_order);
    return m;
}

template <Scalar S>
HomogeneousMatrix<S> random_invertible_homogeneous(Rng& rng, int n, int g,
                                                   unsigned cyclotomic_order = 1) {
    HomogeneousMatrix<S> m(n, g);
    for (int i = 1; i <= n; ++i) m.gamma(i) = random_nonzero_scalar<S>(rng, cyclotomic_order);
    return m;
}

/// Random multilinear polynomial: nvars variables with the given Z_n degrees,
/// a random nonempty subset of the permutation words, nonzero coefficients.
/// Retries until the canonical form is nonzero.
template <Scalar S>
GradedPolynomial<S> random_multilinear(Rng& rng, int n, const std::vector<int>& degrees,
                                       unsigned cyclotomic_order = 1) {
    int m = static_cast<int>(degrees.size());
    std::vector<int> base(m);
    for (int i = 0; i < m; ++i) base[i] = i + 1;
    for (int guard = 0; guard < 1000; ++guard) {
        GradedPolynomial<S> f(n);
        for (int i = 0; i < m; ++i) f.declare(i + 1, degrees[i]);
        std::vector<std::vector<int>> words;
        std::vector<int> perm = base;
        do {
            words.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        bool any = false;
        for (const auto& w : words) {
            if (rng.below(2) == 0 && !(words.size() == 1)) continue;
            f.add_term(random_nonzero_scalar<S>(rng, cyclotomic_order), w);
            any = true;
        }
        if (any && !f.is_zero()) return f;
    }
    throw Error("failed to generate a nonzero multilinear polynomial");
}

/// Random multilinear data for a scan trial: between 1 and max_vars variables
/// with random degrees mod n.
template <Scalar S>
GradedPolynomial<S> random_scan_polynomial(Rng& rng, int n, int max_vars,
                                           unsigned cyclotomic_order = 1) {
    int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars)));
    std::vector<int> degrees(m);
    for (auto& d : degrees) d = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    return random_multilinear<S>(rng, n, degrees, cyclotomic_order);
}

}  // namespace gradim
