#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradim/errors.hpp"
#include "gradim/graded_poly.hpp"
#include "gradim/matrix.hpp"
#include "gradim/scalar.hpp"

namespace gradim {

/// Moduli accepted by the binomial preimage solver: 2 and the odd primes.
inline bool is_prime_modulus(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

/// a^{-1} mod n for gcd(a, n) = 1, by the extended Euclidean algorithm.
inline int mod_inverse(int a, int n) {
    int t = 0, nt = 1, r = n, nr = mod_index(a, n);
    while (nr != 0) {
        int q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return mod_index(t, n);
}

template <Scalar S>
unsigned cyclotomic_ambient(const S&) {
    return 1;
}
template <>
inline unsigned cyclotomic_ambient<Cyclo>(const Cyclo& a) {
    return a.order();
}

/// Re-evaluates f at the assignment and checks it reproduces the target,
/// exactly for the exact backends and to a relative 1e-9 max-entry error for
/// the floating backend. Returns the measured residual (0 when exact).
template <Scalar S>
double verified_residual(const GradedPolynomial<S>& f,
                         const std::map<int, HomogeneousMatrix<S>>& assignment,
                         const HomogeneousMatrix<S>& target) {
    Matrix<S> value = f.evaluate(assignment);
    Matrix<S> want = target.dense();
    if constexpr (std::is_same_v<S, ComplexScalar>) {
        double scale = 1.0, res = 0.0;
        for (int i = 0; i < want.size(); ++i)
            for (int j = 0; j < want.size(); ++j) {
                scale = std::max(scale, std::abs(want(i, j).v));
                res = std::max(res, std::abs(value(i, j).v - want(i, j).v));
            }
        if (res > 1e-9 * scale)
            throw Error("preimage verification failed: residual " + std::to_string(res));
        return res;
    } else {
        if (!(value == want)) throw Error("internal error: preimage re-evaluation mismatch");
        return 0.0;
    }
}

}  // namespace detail

/// Solution of [B, D] = C with D diagonal, for a component C of nonzero
/// degree: d_i = i - 1 and b_i = c_i / (d_{i+g} - d_i).
template <Scalar S>
struct CommutatorPreimage {
    HomogeneousMatrix<S> b;
    HomogeneousMatrix<S> d;
};

template <Scalar S>
CommutatorPreimage<S> commutator_preimage(const HomogeneousMatrix<S>& c) {
    using T = scalar_traits<S>;
    const int n = c.size();
    const int g = c.degree();
    if (g == 0)
        throw ZeroDegreeError("commutators with a diagonal need degree != 0; "
                              "diagonal targets have their own solver");
    HomogeneousMatrix<S> b(n, g), d(n, 0);
    for (int i = 0; i < n; ++i) d.gamma(i + 1) = T::from_int(i);
    for (int i = 0; i < n; ++i) {
        S step = d.gamma(i + g + 1) - d.gamma(i + 1);
        b.gamma(i + 1) = c.gamma(i + 1) * T::inverse(step);
    }
    return {b, d};
}

/// Solution of [B, C] = D for a traceless diagonal D, with C the all-ones
/// component of degree -g; needs gcd(g, n) = 1 so the walk i -> i - g closes
/// only after n steps.
template <Scalar S>
struct ZeroComponentPreimage {
    HomogeneousMatrix<S> b;
    HomogeneousMatrix<S> c;
};

template <Scalar S>
ZeroComponentPreimage<S> zero_component_commutator_preimage(const HomogeneousMatrix<S>& target,
                                                            int g) {
    using T = scalar_traits<S>;
    const int n = target.size();
    if (!target.is_zero() && target.degree() != 0)
        throw DegreeMismatchError("target of a diagonal commutator must be diagonal");
    const int gr = mod_index(g, n);
    if (std::gcd(gr, n) != 1)
        throw NonInvertibleDegreeError("degree " + std::to_string(g) + " is not invertible mod " +
                                       std::to_string(n));
    S tr = T::zero();
    for (int i = 0; i < n; ++i) tr = tr + target.gamma(i + 1);
    if (!T::is_zero(tr))
        throw NonzeroTraceError("diagonal commutator targets must be traceless, trace = " +
                                T::str(tr));
    HomogeneousMatrix<S> b(n, gr);
    HomogeneousMatrix<S> c = HomogeneousMatrix<S>::all_ones(n, -gr);
    // [B, C] has diagonal entries b_i - b_{i-g}; anchor b_1 = 0 and walk
    // downward, accumulating the required differences. The cycle closes
    // because the trace vanishes.
    S acc = T::zero();
    long long pos = 1;
    b.gamma(1) = T::zero();
    for (int k = 1; k < n; ++k) {
        acc = acc + target.gamma(pos);
        pos = pos - gr;
        b.gamma(pos) = -acc;
    }
    return {b, c};
}

/// Diagonal D with entries d_i such that D M D^{-1} has every entry on the
/// walk 1, 1+g, 1+2g, ... equal to 1 except the last, which carries the
/// product of the original entries. When M has zeros the walk is re-anchored
/// after the first zero and the conjugated entries all land in {0, 1} with
/// the zero pattern unchanged. Needs gcd(deg M, n) = 1.
template <Scalar S>
struct DiagonalNormalization {
    HomogeneousMatrix<S> d;
    HomogeneousMatrix<S> normalized;
};

template <Scalar S>
DiagonalNormalization<S> normalize_by_diagonal(const HomogeneousMatrix<S>& m) {
    using T = scalar_traits<S>;
    const int n = m.size();
    const int g = m.degree();
    if (std::gcd(mod_index(g, n), n) != 1)
        throw NonInvertibleDegreeError("degree " + std::to_string(g) + " is not invertible mod " +
                                       std::to_string(n));
    // Walk of rows 0, g, 2g, ... (0-based); entry k of the walk moves to
    // d_k gamma_k / d_{k+1} under conjugation, so setting d_{k+1} = d_k gamma_k
    // clears it to 1. With zeros present, restart the chain one step past the
    // first zero so every constrained entry is 0 or 1.
    std::vector<int> walk(n);
    for (int k = 0, row = 0; k < n; ++k, row = mod_index(row + g, n)) walk[k] = row;
    int start = 0;
    for (int k = 0; k < n; ++k)
        if (T::is_zero(m.gamma(walk[k] + 1))) {
            start = (k + 1) % n;
            break;
        }
    HomogeneousMatrix<S> d(n, 0);
    d.gamma(walk[start] + 1) = T::one();
    for (int j = 0; j + 1 < n; ++j) {
        int k = (start + j) % n, nx = (start + j + 1) % n;
        const S& gk = m.gamma(walk[k] + 1);
        d.gamma(walk[nx] + 1) =
            T::is_zero(gk) ? T::one() : d.gamma(walk[k] + 1) * gk;
    }
    HomogeneousMatrix<S> norm(n, g);
    for (int i = 0; i < n; ++i)
        norm.gamma(i + 1) =
            d.gamma(i + 1) * m.gamma(i + 1) * T::inverse(d.gamma(i + g + 1));
    return {d, norm};
}

/// Instance of "find B, C with B C - alpha C B = M" where B, C range over the
/// components of degree g and h.
template <Scalar S>
struct Degree2Problem {
    int n;
    S alpha;
    int g;
    int h;
    HomogeneousMatrix<S> target;
};

/// Assignment {1 -> B, 2 -> C} whose re-evaluation reproduced the target;
/// `residual` is the max-entry error of that check (0 on exact backends).
template <Scalar S>
struct PreimageCertificate {
    std::map<int, HomogeneousMatrix<S>> assignment;
    double residual = 0.0;
};

/// x1 x2 - alpha x2 x1 with deg x1 = g, deg x2 = h.
template <Scalar S>
GradedPolynomial<S> degree2_polynomial(int n, const S& alpha, int g, int h) {
    GradedPolynomial<S> f(n);
    f.declare(1, g);
    f.declare(2, h);
    f.add_term(scalar_traits<S>::one(), {1, 2});
    f.add_term(-alpha, {2, 1});
    return f;
}

namespace detail {

/// Exponent of the gauge variable in the r-th cycle-consistency term when the
/// c-slots listed in `special` carry the unknown and all others are 1. The
/// r-th term multiplies c_{ph} for p < r and c_{g+ih} = c-slot (t+i) for
/// i in [r+1, n-1].
inline int gauge_exponent(int r, int t, int n, const std::vector<int>& special) {
    int e = 0;
    for (int p : special) {
        if (p < r) ++e;
        if (mod_index(p - t, n) >= r + 1) ++e;
    }
    return e;
}

template <Scalar S>
struct GaugeSolution {
    std::vector<S> bvec, cvec;  // indexed by slot k, i.e. row k*h
};

/// One gauge attempt on slot values `gam`: put the unknown x at the slots in
/// `special`, reduce the cycle-consistency constraint to a polynomial in x of
/// degree <= 2, and if it has a nonzero root in the field run the b-recursion
/// from B_0 = 1. Sets `incomplete` when root finding could not decide field
/// membership, so the caller can suggest the complex backend.
template <Scalar S>
std::optional<GaugeSolution<S>> try_gauge(const std::vector<S>& gam, const S& alpha, int t,
                                          const std::vector<int>& special, unsigned ambient,
                                          bool& incomplete) {
    using T = scalar_traits<S>;
    const int n = static_cast<int>(gam.size());
    std::array<S, 3> q{T::zero(), T::zero(), T::zero()};
    S pw = T::one();
    for (int r = 0; r < n; ++r) {
        int e = gauge_exponent(r, t, n, special);
        q[e] = q[e] + pw * gam[r];
        pw = pw * alpha;
    }
    S x = T::one();
    if (!(T::is_zero(q[0]) && T::is_zero(q[1]) && T::is_zero(q[2]))) {
        QuadraticRoots<S> roots = solve_quadratic_in(q[2], q[1], q[0], ambient);
        if (!roots.complete) incomplete = true;
        bool found = false;
        for (const S& r : roots.roots)
            if (!T::is_zero(r)) {
                x = r;
                found = true;
                break;
            }
        if (!found) return std::nullopt;
    }
    GaugeSolution<S> sol;
    sol.cvec.assign(n, T::one());
    for (int p : special) sol.cvec[p] = x;
    sol.bvec.assign(n, T::zero());
    sol.bvec[0] = T::one();
    S ainv = T::inverse(alpha);
    for (int k = 0; k + 1 < n; ++k)
        sol.bvec[k + 1] =
            (sol.bvec[k] * sol.cvec[mod_index(k + t, n)] - gam[k]) * ainv *
            T::inverse(sol.cvec[k]);
    // The root makes the recursion close around the cycle; check the wrap
    // equation B_{n-1} C_{t-1} - alpha C_{n-1} B_0 = gam_{n-1}.
    S wrap = sol.bvec[n - 1] * sol.cvec[mod_index(n - 1 + t, n)] -
             alpha * sol.cvec[n - 1] * sol.bvec[0];
    if (!T::equal(wrap, gam[n - 1])) {
        if constexpr (std::is_same_v<S, ComplexScalar>)
            return std::nullopt;  // numerically ill-conditioned gauge, try another
        else
            throw Error("internal error: gauge cycle failed to close");
    }
    return sol;
}

/// General branch: g, h, g+h all nonzero mod a prime n and the target has at
/// least two nonzero entries. Search over shift conjugations and gauge slots,
/// normalizing by a diagonal first so the constrained entries are 0 or 1.
template <Scalar S>
void solve_binomial_gauge(const HomogeneousMatrix<S>& m, const S& alpha, int g, int h,
                          HomogeneousMatrix<S>& b_out, HomogeneousMatrix<S>& c_out) {
    using T = scalar_traits<S>;
    const int n = m.size();
    const int hinv = mod_inverse(h, n);
    const int t = mod_index(static_cast<long long>(g) * hinv, n);
    const unsigned ambient = cyclotomic_ambient(alpha);

    std::vector<S> gam(n);  // slot k holds the entry at row k*h
    for (int k = 0, row = 0; k < n; ++k, row = mod_index(row + h, n))
        gam[k] = m.gamma(row + 1);

    // Prefer shifts that land a nonzero entry on slot t, where the diagonal
    // normalization leaves its one unconstrained value.
    std::vector<int> shifts;
    for (int pass = 0; pass < 2; ++pass)
        for (int s = 0; s < n; ++s)
            if ((pass == 0) == !T::is_zero(gam[mod_index(t - s, n)])) shifts.push_back(s);

    const std::vector<std::vector<int>> slots = {
        {t, mod_index(t + 1, n)}, {t}, {mod_index(t + 1, n)}};
    bool incomplete = false;
    for (const auto& special : slots)
        for (int s : shifts) {
            const int ks = mod_index(static_cast<long long>(s) * h, n);
            HomogeneousMatrix<S> mrot = m.shift_conjugate(ks);
            std::vector<S> gs(n);
            for (int k = 0, row = 0; k < n; ++k, row = mod_index(row + h, n))
                gs[k] = mrot.gamma(row + 1);
            // Diagonal gauge in slot space: the conjugated entry at slot k is
            // d_k gs_k / d_{k+t+1}, so a chain of slot step t+1 ending at slot
            // t normalizes every other entry to 0 or 1. Step t+1 is invertible
            // because g + h != 0 mod the prime n.
            std::vector<S> dslot(n, T::one());
            for (int j = 0, u = mod_index(2 * t + 1, n); j + 1 < n; ++j) {
                int nx = mod_index(u + t + 1, n);
                dslot[nx] = T::is_zero(gs[u]) ? T::one() : dslot[u] * gs[u];
                u = nx;
            }
            std::vector<S> ngam(n);
            for (int k = 0; k < n; ++k)
                ngam[k] = dslot[k] * gs[k] * T::inverse(dslot[mod_index(k + t + 1, n)]);
            auto sol = try_gauge(ngam, alpha, t, special, ambient, incomplete);
            if (!sol) continue;
            std::vector<S> drow(n, T::one());
            for (int k = 0, row = 0; k < n; ++k, row = mod_index(row + h, n))
                drow[row] = dslot[k];
            // Undo the diagonal (X -> D^{-1} X D) and the shift.
            HomogeneousMatrix<S> bb(n, g), cc(n, h);
            for (int k = 0, row = 0; k < n; ++k, row = mod_index(row + h, n)) {
                bb.gamma(row + 1) = sol->bvec[k] * drow[mod_index(row + g, n)] *
                                    T::inverse(drow[row]);
                cc.gamma(row + 1) = sol->cvec[k] * drow[mod_index(row + h, n)] *
                                    T::inverse(drow[row]);
            }
            b_out = bb.shift_conjugate(-ks);
            c_out = cc.shift_conjugate(-ks);
            return;
        }
    if (incomplete)
        throw QuadraticUnsolvableError(
            "the gauge quadratic has no root in this scalar field; retry with the complex "
            "backend");
    throw QuadraticUnsolvableError("no conjugation gauge produced a nonzero root for this target");
}

}  // namespace detail

/// Constructive preimage for the binomial x1 x2 - alpha x2 x1 on the
/// components of degree g and h mod a prime n. Throws NotInImageError when the
/// target provably lies outside the image, IsIdentityTargetError when the
/// binomial vanishes identically, and QuadraticUnsolvableError when a root
/// needed by the construction does not exist in the scalar field. Every
/// returned certificate has been re-evaluated against the target.
template <Scalar S>
PreimageCertificate<S> degree2_preimage(const Degree2Problem<S>& p) {
    using T = scalar_traits<S>;
    const int n = p.n;
    if (!is_prime_modulus(n))
        throw UnsupportedModulusError("binomial preimages need a prime modulus, got " +
                                      std::to_string(n));
    if (p.target.size() != n) throw DimensionError("target size does not match the modulus");
    const int g = mod_index(p.g, n), h = mod_index(p.h, n);
    const int gh = mod_index(g + h, n);
    const S& alpha = p.alpha;
    const HomogeneousMatrix<S>& m = p.target;
    if (!m.is_zero() && m.degree() != gh)
        throw DegreeMismatchError("target degree " + std::to_string(m.degree()) +
                                  " differs from deg(x1 x2) = " + std::to_string(gh));

    HomogeneousMatrix<S> b(n, g), c(n, h);
    if (m.is_zero()) {
        c = HomogeneousMatrix<S>::all_ones(n, h);  // b = 0 works for any alpha
    } else if (T::is_zero(alpha)) {
        c = HomogeneousMatrix<S>::all_ones(n, h);  // plain product: b_i = gamma_i
        for (int i = 0; i < n; ++i) b.gamma(i + 1) = m.gamma(i + 1);
    } else if (g == 0 && h == 0) {
        if (T::equal(alpha, T::one()))
            throw IsIdentityTargetError(
                "x1 x2 - x2 x1 vanishes identically on pairs of diagonal matrices");
        c = HomogeneousMatrix<S>::all_ones(n, 0);
        S inv = T::inverse(T::one() - alpha);
        for (int i = 0; i < n; ++i) b.gamma(i + 1) = m.gamma(i + 1) * inv;
    } else if (!T::equal(scalar_pow(alpha, n), T::one())) {
        // With c all ones the equations decouple into b_i - alpha b_{i+h} =
        // gamma_i; on each orbit of i -> i+h (length L | n) the telescoped sum
        // gives b at the orbit start, and alpha^L != 1 since alpha^n != 1.
        c = HomogeneousMatrix<S>::all_ones(n, h);
        std::vector<char> seen(n, 0);
        S ainv = T::inverse(alpha);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::vector<int> orbit;
            for (int i = s; !seen[i]; i = mod_index(i + h, n)) {
                seen[i] = 1;
                orbit.push_back(i);
            }
            S acc = T::zero(), pw = T::one();
            for (int r : orbit) {
                acc = acc + pw * m.gamma(r + 1);
                pw = pw * alpha;
            }
            S cur = acc * T::inverse(T::one() - pw);  // pw = alpha^L here
            b.gamma(orbit[0] + 1) = cur;
            for (std::size_t r = 0; r + 1 < orbit.size(); ++r) {
                cur = (cur - m.gamma(orbit[r] + 1)) * ainv;
                b.gamma(orbit[r + 1] + 1) = cur;
            }
        }
    } else if (h == 0) {
        // Swap the variable roles: B C - alpha C B = M iff
        // C B - alpha^{-1} B C = -alpha^{-1} M.
        S ai = T::inverse(alpha);
        Degree2Problem<S> sw{n, ai, 0, g, m.scaled(-ai)};
        PreimageCertificate<S> sub = degree2_preimage(sw);
        b = sub.assignment.at(2);
        c = sub.assignment.at(1);
    } else if (g == 0) {
        // B diagonal: pick the staircase with value k at row k*h (one orbit,
        // n prime). Then d_i = b_i - alpha b_{i+h} is k - alpha(k+1) for some
        // k, never zero for a root of unity alpha, and c_i = gamma_i / d_i.
        for (int k = 0, row = 0; k < n; ++k, row = mod_index(row + h, n))
            b.gamma(row + 1) = T::from_int(k);
        for (int i = 0; i < n; ++i) {
            S d = b.gamma(i + 1) - alpha * b.gamma(i + h + 1);
            c.gamma(i + 1) = m.gamma(i + 1) * T::inverse(d);
        }
    } else if (gh == 0) {
        // Twisted case g + h = 0 with alpha^n = 1: the weighted trace
        // sum_r alpha^r gamma_{rh} vanishes on every value of the binomial,
        // so it is the exact membership test. When it vanishes, c all ones
        // and the b-recursion close up around the cycle.
        S tw = T::zero(), pw = T::one();
        for (int k = 0, row = 0; k < n; ++k, row = mod_index(row + h, n)) {
            tw = tw + pw * m.gamma(row + 1);
            pw = pw * alpha;
        }
        if (!T::is_zero(tw))
            throw NotInImageError("the weighted trace sum_r alpha^r gamma_{rh} = " + T::str(tw) +
                                  " must vanish for targets of these degrees");
        c = HomogeneousMatrix<S>::all_ones(n, h);
        S cur = T::one(), ainv = T::inverse(alpha);
        b.gamma(1) = cur;
        for (int k = 0, row = 0; k + 1 < n; ++k) {
            cur = (cur - m.gamma(row + 1)) * ainv;
            row = mod_index(row + h, n);
            b.gamma(row + 1) = cur;
        }
    } else {
        // g, h, g+h all nonzero mod the prime n.
        int nonzero = 0, prow = 0;
        for (int i = 0; i < n; ++i)
            if (!T::is_zero(m.gamma(i + 1))) {
                ++nonzero;
                prow = i;
            }
        if (nonzero == 1) {
            // Single entry gamma_p E_{p,p+g+h} = (E_{p,p+g})(gamma_p E_{p+g,p+g+h});
            // the reversed product C B is zero because g + h != 0.
            b.gamma(prow + 1) = T::one();
            c.gamma(prow + g + 1) = m.gamma(prow + 1);
        } else {
            detail::solve_binomial_gauge(m, alpha, g, h, b, c);
        }
    }

    PreimageCertificate<S> cert;
    cert.assignment.emplace(1, b);
    cert.assignment.emplace(2, c);
    cert.residual = detail::verified_residual(degree2_polynomial<S>(n, alpha, g, h),
                                              cert.assignment, p.target);
    return cert;
}

}  // namespace gradim
