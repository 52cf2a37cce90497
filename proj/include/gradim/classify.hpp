#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradim/errors.hpp"
#include "gradim/graded_poly.hpp"
#include "gradim/matrix.hpp"
#include "gradim/multipoly.hpp"
#include "gradim/random_objects.hpp"
#include "gradim/solvers.hpp"
#include "gradim/unipoly.hpp"

namespace gradim {

/// Verdicts about the image of a graded polynomial. Component carries the
/// degree of the full homogeneous component; Dense0/Dense1 mean "witnessed
/// dense subset of the component" in the sampling classifiers; Unresolved is
/// an honest "matches no named subspace / not decided by this procedure".
enum class ImageLabel { Zero, Scalars, TracelessDiagonal0, Component, Dense0, Dense1, Unresolved };

inline std::string image_label_name(ImageLabel l) {
    switch (l) {
        case ImageLabel::Zero: return "Zero";
        case ImageLabel::Scalars: return "Scalars";
        case ImageLabel::TracelessDiagonal0: return "TracelessDiagonal0";
        case ImageLabel::Component: return "Component";
        case ImageLabel::Dense0: return "Dense0";
        case ImageLabel::Dense1: return "Dense1";
        case ImageLabel::Unresolved: return "Unresolved";
    }
    return "Unresolved";
}

/// A concrete evaluation of the polynomial: assignment of homogeneous
/// matrices to variable ids together with the resulting value.
template <Scalar S>
struct EvaluationWitness {
    std::map<int, HomogeneousMatrix<S>> assignment;
    Matrix<S> value = Matrix<S>(1);  // placeholder until assigned
};

template <Scalar S>
struct ImageClassification {
    ImageLabel label = ImageLabel::Unresolved;
    std::optional<int> degree;  // set for Component
    std::vector<EvaluationWitness<S>> certificates;
    bool semi_decision = false;  // true when the verdict rests on sampling only
    std::uint64_t seed = 0;
    std::string note;
};

namespace detail {

/// Conjugation of a whole witness by the k-th power of the cyclic shift;
/// evaluations commute with it, so the value transforms the same way.
template <Scalar S>
EvaluationWitness<S> shift_witness(const EvaluationWitness<S>& w, int k) {
    EvaluationWitness<S> out;
    for (const auto& [id, m] : w.assignment) out.assignment.emplace(id, m.shift_conjugate(k));
    out.value = w.value.shift_conjugate(k);
    return out;
}

/// Incremental Gaussian span of n x n matrices viewed as n^2-vectors.
template <Scalar S>
class SpanBuilder {
  public:
    explicit SpanBuilder(int n) : n_(n) {}

    /// True when the matrix enlarged the span.
    bool add(const Matrix<S>& m) {
        using T = scalar_traits<S>;
        std::vector<S> v = flatten(m);
        for (const auto& [pos, row] : pivots_) {
            if (T::is_zero(v[pos])) continue;
            S c = v[pos];
            for (int k = 0; k < n_ * n_; ++k) v[k] = v[k] - c * row[k];
        }
        int lead = -1;
        for (int k = 0; k < n_ * n_; ++k)
            if (!T::is_zero(v[k])) {
                lead = k;
                break;
            }
        if (lead < 0) return false;
        S inv = T::inverse(v[lead]);
        for (int k = 0; k < n_ * n_; ++k) v[k] = v[k] * inv;
        pivots_.emplace_back(lead, std::move(v));
        return true;
    }

    int dim() const { return static_cast<int>(pivots_.size()); }

    std::vector<Matrix<S>> basis_matrices() const {
        std::vector<Matrix<S>> out;
        for (const auto& [pos, row] : pivots_) {
            Matrix<S> m(n_);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) m(i, j) = row[i * n_ + j];
            out.push_back(std::move(m));
        }
        return out;
    }

  private:
    int n_;
    std::vector<std::pair<int, std::vector<S>>> pivots_;

    std::vector<S> flatten(const Matrix<S>& m) const {
        std::vector<S> v;
        v.reserve(n_ * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) v.push_back(m(i, j));
        return v;
    }
};

/// Assignment realizing a nonvanishing point of some entry of the generic
/// evaluation: variables appearing in the point get their sampled value, all
/// other coordinates stay zero.
template <Scalar S>
std::map<int, HomogeneousMatrix<S>> assignment_from_point(const GradedPolynomial<S>& f,
                                                          const std::map<VarKey, S>& pt) {
    const int n = f.modulus();
    std::map<int, HomogeneousMatrix<S>> a;
    for (const auto& [id, deg] : f.variables()) {
        HomogeneousMatrix<S> m(n, deg);
        for (int i = 1; i <= n; ++i) {
            auto it = pt.find(VarKey{id, i, mod_index(i - 1 + deg, n) + 1});
            if (it != pt.end()) m.gamma(i) = it->second;
        }
        a.emplace(id, std::move(m));
    }
    return a;
}

}  // namespace detail

/// Exact identity test: f vanishes on all graded substitutions iff its
/// evaluation at generic homogeneous matrices is the zero matrix of
/// polynomials. On a non-identity, returns a witness assignment extracted
/// from a nonvanishing point of a nonzero entry.
template <Scalar S>
struct IdentityReport {
    bool identity = true;
    std::optional<EvaluationWitness<S>> witness;
};

template <Scalar S>
IdentityReport<S> is_graded_identity(const GradedPolynomial<S>& f) {
    const int n = f.modulus();
    Matrix<MultiPoly<S>> gm = f.evaluate_generic(true);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (scalar_traits<MultiPoly<S>>::is_zero(gm(i, j))) continue;
            auto pt = nonvanishing_point<S>(gm(i, j));
            if (!pt) throw Error("internal error: nonzero polynomial without a nonvanishing point");
            EvaluationWitness<S> w;
            w.assignment = detail::assignment_from_point(f, *pt);
            w.value = f.evaluate(w.assignment);
            if (w.value.is_zero())
                throw Error("internal error: identity witness evaluated to zero");
            return {false, std::move(w)};
        }
    return {true, std::nullopt};
}

/// True iff every value of f is a scalar matrix and f is not an identity:
/// the generic evaluation must be diagonal with all diagonal entries equal
/// as polynomials.
template <Scalar S>
bool is_graded_central(const GradedPolynomial<S>& f) {
    const int n = f.modulus();
    Matrix<MultiPoly<S>> gm = f.evaluate_generic(true);
    using T = scalar_traits<MultiPoly<S>>;
    bool zero = true;
    for (int i = 0; i < n && zero; ++i)
        for (int j = 0; j < n; ++j)
            if (!T::is_zero(gm(i, j))) {
                zero = false;
                break;
            }
    if (zero) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !T::is_zero(gm(i, j))) return false;
    for (int i = 1; i < n; ++i)
        if (!T::equal(gm(i, i), gm(0, 0))) return false;
    return true;
}

/// Sampled linear span of the image of a multilinear polynomial. For nonzero
/// degree the matrix-unit evaluations span it; in degree 0 the sampler also
/// feeds every cyclic-shift conjugate of each unit witness plus seeded random
/// evaluations. The prediction compares the span against the named
/// subspaces: 0, the scalars, the traceless diagonals, a full component.
template <Scalar S>
struct SpanReport {
    int degree = 0;
    std::vector<Matrix<S>> basis;
    std::vector<EvaluationWitness<S>> generators;
    ImageClassification<S> prediction;
};

template <Scalar S>
SpanReport<S> image_span(const GradedPolynomial<S>& f, std::uint64_t seed = 0,
                         int random_trials = 200) {
    using T = scalar_traits<S>;
    if (!f.is_multilinear())
        throw NotMultilinearError("image span sampling needs a multilinear polynomial");
    const int n = f.modulus();
    const int d = f.homogeneous_degree().value_or(0);
    SpanReport<S> rep;
    rep.degree = d;
    detail::SpanBuilder<S> span(n);
    auto feed = [&](const EvaluationWitness<S>& w) {
        if (span.add(w.value)) rep.generators.push_back(w);
    };
    UnitEvaluationEnumerator<S> units(f);
    while (auto item = units.next()) {
        EvaluationWitness<S> w{std::move(item->assignment), std::move(item->value)};
        feed(w);
        if (d == 0)
            for (int k = 1; k < n; ++k) feed(detail::shift_witness(w, k));
    }
    if (d == 0) {
        Rng rng(seed);
        for (int t = 0; t < random_trials && span.dim() < n; ++t) {
            EvaluationWitness<S> w;
            for (const auto& [id, deg] : f.variables())
                w.assignment.emplace(id, random_homogeneous<S>(rng, n, deg));
            w.value = f.evaluate(w.assignment);
            feed(w);
        }
    }
    rep.basis = span.basis_matrices();

    ImageClassification<S>& out = rep.prediction;
    out.certificates = rep.generators;
    out.seed = seed;
    const int dim = span.dim();
    bool diagonal = true, traceless = true, scalar = true;
    for (const Matrix<S>& b : rep.basis) {
        S tr = T::zero();
        for (int i = 0; i < n; ++i) {
            tr = tr + b(i, i);
            for (int j = 0; j < n; ++j)
                if (i != j && !T::is_zero(b(i, j))) diagonal = false;
            if (!T::equal(b(i, i), b(0, 0))) scalar = false;
        }
        if (!T::is_zero(tr)) traceless = false;
    }
    if (dim == 0) {
        out.label = ImageLabel::Zero;
    } else if (d == 0 && dim == 1 && diagonal && scalar) {
        out.label = ImageLabel::Scalars;
    } else if (d == 0 && dim == n - 1 && diagonal && traceless) {
        out.label = ImageLabel::TracelessDiagonal0;
    } else if (dim == n) {
        bool inside = true;  // every basis vector must live in the component
        for (const Matrix<S>& b : rep.basis)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!T::is_zero(b(i, j)) && mod_index(j - i, n) != d) inside = false;
        if (inside) {
            out.label = ImageLabel::Component;
            out.degree = d;
        } else {
            out.label = ImageLabel::Unresolved;
            out.note = "span has full component dimension but leaves the component";
        }
    } else {
        out.label = ImageLabel::Unresolved;
        out.note = "sampled span of dimension " + std::to_string(dim) +
                   " matches no named subspace";
    }
    return rep;
}

/// Rank of the circulant matrix with first row alpha, through the polynomial
/// gcd: rank = n - deg gcd(alpha_1 + alpha_2 x + ... + alpha_n x^{n-1}, x^n - 1).
struct CirculantReport {
    std::vector<Rational> alpha;
    UniPoly p;
    int d = 0;
    int rank = 0;
};

inline CirculantReport circulant_span(const std::vector<Rational>& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n < 2) throw DimensionError("circulant rank needs length >= 2");
    UniPoly p(alpha);
    UniPoly g = unipoly_gcd(p, UniPoly::x_pow_minus_one(n));
    int d = g.degree();
    return {alpha, p, d, n - d};
}

/// True iff some evaluation of f is invertible: decided symbolically as
/// det(generic evaluation) != 0, which over an infinite field is equivalent.
template <Scalar S>
bool has_nonsingular_value(const GradedPolynomial<S>& f) {
    if (!f.homogeneous_degree())
        throw DegreeMismatchError("nonsingular-value test needs a homogeneous polynomial");
    Matrix<MultiPoly<S>> gm = f.evaluate_generic(true);
    return !scalar_traits<MultiPoly<S>>::is_zero(gm.det());
}

/// Exact classification of the image of a multilinear polynomial over Z_2:
/// one of 0, the scalars, the traceless diagonals, the diagonal component,
/// the antidiagonal component. Certificates exhibit spanning values.
template <Scalar S>
ImageClassification<S> classify_multilinear_m2(const GradedPolynomial<S>& f) {
    using MT = scalar_traits<MultiPoly<S>>;
    if (f.modulus() != 2) throw WrongModulusError("this classifier handles modulus 2 only");
    if (!f.is_multilinear())
        throw NotMultilinearError("this classifier needs a multilinear polynomial");
    ImageClassification<S> out;
    IdentityReport<S> idr = is_graded_identity(f);
    if (idr.identity) {
        out.label = ImageLabel::Zero;
        return out;
    }
    Matrix<MultiPoly<S>> gm = f.evaluate_generic(true);
    const int d = f.homogeneous_degree().value_or(0);
    auto witness_at = [&](const MultiPoly<S>& p) {
        auto pt = nonvanishing_point<S>(p);
        if (!pt) throw Error("internal error: nonvanishing point missing");
        EvaluationWitness<S> w;
        w.assignment = detail::assignment_from_point(f, *pt);
        w.value = f.evaluate(w.assignment);
        return w;
    };
    if (d == 1) {
        out.label = ImageLabel::Component;
        out.degree = 1;
        MultiPoly<S> split = gm(0, 1) * gm(0, 1) - gm(1, 0) * gm(1, 0);
        if (!MT::is_zero(split)) {
            // value with entries of distinct squares: it and its shift
            // conjugate span the component
            EvaluationWitness<S> w = witness_at(split);
            out.certificates.push_back(w);
            out.certificates.push_back(detail::shift_witness(w, 1));
        } else {
            out.certificates = image_span(f).generators;
        }
        return out;
    }
    const MultiPoly<S>& m11 = gm(0, 0);
    const MultiPoly<S>& m22 = gm(1, 1);
    if (MT::equal(m11, m22)) {
        out.label = ImageLabel::Scalars;
        out.certificates.push_back(witness_at(m11));
        return out;
    }
    if (MT::is_zero(m11 + m22)) {
        out.label = ImageLabel::TracelessDiagonal0;
        out.certificates.push_back(witness_at(m11));
        return out;
    }
    out.label = ImageLabel::Component;
    out.degree = 0;
    EvaluationWitness<S> w = witness_at((m11 - m22) * (m11 + m22));
    out.certificates.push_back(w);
    out.certificates.push_back(detail::shift_witness(w, 1));
    return out;
}

/// Image of x1 x2 - alpha x2 x1 on the degree pair (g, h) over a prime
/// modulus, with constructive certificates: preimages of a basis of the
/// image. The one genuinely open configuration (alpha a primitive n-th root
/// of unity with n odd and g + h = 0, g h != 0) reports the exact hyperplane
/// it spans and is labelled Unresolved because that subspace has no name in
/// the classification.
template <Scalar S>
ImageClassification<S> classify_degree2(int n, const S& alpha, int g, int h) {
    using T = scalar_traits<S>;
    if (!is_prime_modulus(n))
        throw UnsupportedModulusError("binomial classification needs a prime modulus, got " +
                                      std::to_string(n));
    const int gr = mod_index(g, n), hr = mod_index(h, n);
    const int d = mod_index(gr + hr, n);
    GradedPolynomial<S> f = degree2_polynomial<S>(n, alpha, gr, hr);
    ImageClassification<S> out;
    auto witness_for = [&](const HomogeneousMatrix<S>& target) {
        PreimageCertificate<S> cert = degree2_preimage<S>({n, alpha, gr, hr, target});
        EvaluationWitness<S> w;
        w.assignment = std::move(cert.assignment);
        w.value = f.evaluate(w.assignment);
        return w;
    };
    auto component = [&](int deg) {
        out.label = ImageLabel::Component;
        out.degree = deg;
        for (int i = 1; i <= n; ++i)
            out.certificates.push_back(witness_for(HomogeneousMatrix<S>::unit(n, deg, i)));
    };

    if (T::is_zero(alpha)) {
        component(d);
        return out;
    }
    if (gr == 0 && hr == 0) {
        if (T::equal(alpha, T::one())) {
            out.label = ImageLabel::Zero;
            out.note = "diagonal matrices commute, so the binomial vanishes identically";
        } else {
            component(0);
        }
        return out;
    }
    if (!T::equal(scalar_pow(alpha, n), T::one()) || gr == 0 || hr == 0 || d != 0) {
        component(d);
        return out;
    }
    // alpha^n = 1 with g, h nonzero and g + h = 0: the image is the
    // hyperplane sum_r alpha^r gamma_{rh} = 0 inside the diagonal component.
    if (T::equal(alpha, T::one())) {
        out.label = ImageLabel::TracelessDiagonal0;
        for (int r = 1; r < n; ++r) {
            HomogeneousMatrix<S> target(n, 0);
            target.gamma(r) = T::one();
            target.gamma(r + 1) = -T::one();
            out.certificates.push_back(witness_for(target));
        }
        return out;
    }
    if (n == 2) {
        // alpha = -1: the hyperplane gamma_0 - gamma_1 = 0 is the scalars
        out.label = ImageLabel::Scalars;
        HomogeneousMatrix<S> target = HomogeneousMatrix<S>::all_ones(2, 0);
        out.certificates.push_back(witness_for(target));
        return out;
    }
    out.label = ImageLabel::Unresolved;
    out.note =
        "image is the hyperplane sum_r alpha^r gamma_{rh} = 0 inside the diagonal "
        "component: matches no named subspace; certificates span it";
    for (int r = 1; r < n; ++r) {
        HomogeneousMatrix<S> target(n, 0);
        target.gamma(mod_index(static_cast<long long>(r) * hr, n) + 1) = T::one();
        target.gamma(1) = -scalar_pow(alpha, r);
        out.certificates.push_back(witness_for(target));
    }
    return out;
}

/// The eigenvalue-ratio invariant of a 2 x 2 matrix: lambda1/lambda2 +
/// lambda2/lambda1 = tr^2/det - 2 for nonsingular input, the marker value 0
/// when exactly one eigenvalue vanishes, and an error on nilpotent input.
template <Scalar S>
struct RatioValue {
    bool zero_eigenvalue = false;
    S value = scalar_traits<S>::zero();
    std::optional<std::pair<std::complex<double>, std::complex<double>>> eigenvalues;
};

template <Scalar S>
RatioValue<S> eigen_ratio(const Matrix<S>& m) {
    using T = scalar_traits<S>;
    if (m.size() != 2) throw DimensionError("eigenvalue ratios are defined for 2 x 2 matrices");
    S tr = m(0, 0) + m(1, 1);
    S det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    RatioValue<S> out;
    if (T::is_zero(det) && T::is_zero(tr))
        throw NilpotentInputError("nilpotent matrix: both eigenvalues vanish");
    if constexpr (std::is_same_v<S, ComplexScalar>) {
        std::complex<double> t = tr.v, dd = det.v;
        std::complex<double> s = std::sqrt(t * t - 4.0 * dd);
        out.eigenvalues = std::make_pair((t + s) / 2.0, (t - s) / 2.0);
    }
    if (T::is_zero(det)) {
        out.zero_eigenvalue = true;
        return out;
    }
    out.value = tr * tr * T::inverse(det) - T::from_int(2);
    return out;
}

/// Sampling classifier for semi-homogeneous polynomials over Z_2, driven by
/// the eigenvalue-ratio invariant of the nonzero sampled values. Outcomes
/// other than Zero and Component are semi-decisions: they describe the
/// sample, which for a semi-homogeneous polynomial pins the image up to the
/// density statements recorded in the note.
inline ImageClassification<ComplexScalar> classify_semihomogeneous_m2(
    const GradedPolynomial<ComplexScalar>& f, const std::map<int, Rational>& weights,
    int trials = 64, std::uint64_t seed = 0) {
    using T = scalar_traits<ComplexScalar>;
    if (f.modulus() != 2) throw WrongModulusError("this classifier handles modulus 2 only");
    if (!f.weighted_degree(weights))
        throw NotSemiHomogeneousError("the polynomial is not semi-homogeneous for these weights");
    std::optional<int> hd = f.homogeneous_degree();
    if (!hd)
        throw NotSemiHomogeneousError("the monomials do not share a single graded degree");
    ImageClassification<ComplexScalar> out;
    out.seed = seed;
    if (is_graded_identity(f).identity) {
        out.label = ImageLabel::Zero;
        return out;
    }
    const int d = *hd;

    // Sample pool: every matrix-unit tuple (when small enough), then seeded
    // random evaluations. Zero values are skipped; each value is categorized
    // by its ratio invariant, with det = 0 recorded as the ratio marker 0.
    std::vector<EvaluationWitness<ComplexScalar>> pool;
    if (f.variables().size() <= 12) {  // 2^12 unit tuples at most
        std::vector<int> ids;
        for (const auto& [id, deg] : f.variables()) {
            (void)deg;
            ids.push_back(id);
        }
        std::vector<int> idx(ids.size(), 0);
        bool done = false;
        while (!done) {
            EvaluationWitness<ComplexScalar> w;
            for (std::size_t k = 0; k < ids.size(); ++k)
                w.assignment.emplace(
                    ids[k], HomogeneousMatrix<ComplexScalar>::unit(
                                2, f.degree_of(ids[k]), idx[k] + 1));
            w.value = f.evaluate(w.assignment);
            pool.push_back(std::move(w));
            done = true;
            for (std::size_t k = ids.size(); k-- > 0;) {
                if (++idx[k] < 2) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        EvaluationWitness<ComplexScalar> w;
        for (const auto& [id, deg] : f.variables())
            w.assignment.emplace(id, random_homogeneous<ComplexScalar>(rng, 2, deg));
        w.value = f.evaluate(w.assignment);
        pool.push_back(std::move(w));
    }

    struct Sample {
        ComplexScalar ratio;       // the invariant, marker 0 when det = 0
        bool singular = false;     // det = 0 (one eigenvalue zero)
        const EvaluationWitness<ComplexScalar>* w = nullptr;
    };
    std::vector<Sample> samples;
    for (const auto& w : pool) {
        if (w.value.is_zero()) continue;
        ComplexScalar tr = w.value(0, 0) + w.value(1, 1);
        ComplexScalar det = w.value(0, 0) * w.value(1, 1) - w.value(0, 1) * w.value(1, 0);
        Sample s;
        s.w = &w;
        if (T::is_zero(det)) {
            s.singular = true;  // ratio stays the marker 0
        } else {
            s.ratio = tr * tr * T::inverse(det) - T::from_int(2);
        }
        samples.push_back(s);
    }
    if (samples.empty()) {
        out.label = ImageLabel::Unresolved;
        out.semi_decision = true;
        out.note = "all sampled values were zero";
        return out;
    }

    if (d == 0) {
        const Sample* other = nullptr;
        for (const auto& s : samples)
            if (!T::equal(s.ratio, samples.front().ratio)) {
                other = &s;
                break;
            }
        if (other) {
            out.label = ImageLabel::Dense0;
            out.semi_decision = true;
            out.note = "two values with distinct eigenvalue ratios: image is a dense subset "
                       "of the diagonal component";
            out.certificates.push_back(*samples.front().w);
            out.certificates.push_back(*other->w);
            return out;
        }
        ComplexScalar ratio = samples.front().ratio;
        out.semi_decision = true;
        out.certificates.push_back(*samples.front().w);
        if (T::equal(ratio, T::from_int(2))) {
            out.label = ImageLabel::Scalars;
            out.note = "every sampled value has equal eigenvalues (scalar matrix)";
        } else if (T::equal(ratio, -T::from_int(2))) {
            out.label = ImageLabel::TracelessDiagonal0;
            out.note = "every sampled value is traceless";
        } else {
            out.label = ImageLabel::Unresolved;
            out.note = "constant eigenvalue ratio " + T::str(ratio) +
                       " matches no expected degree-0 outcome";
        }
        return out;
    }

    const Sample* singular = nullptr;
    const Sample* invertible = nullptr;
    for (const auto& s : samples) {
        if (s.singular && !singular) singular = &s;
        if (!s.singular && !invertible) invertible = &s;
    }
    if (singular && invertible) {
        out.label = ImageLabel::Component;
        out.degree = 1;
        out.certificates.push_back(*singular->w);
        out.certificates.push_back(*invertible->w);
        return out;
    }
    if (invertible) {
        out.label = ImageLabel::Dense1;
        out.semi_decision = true;
        out.note = "all sampled values are invertible antidiagonal matrices: image is dense "
                   "in the antidiagonal component (zero matrix included)";
        out.certificates.push_back(*invertible->w);
        return out;
    }
    out.label = ImageLabel::Unresolved;
    out.semi_decision = true;
    out.note = "only singular values sampled: no finite decision procedure applies";
    out.certificates.push_back(*singular->w);
    return out;
}

}  // namespace gradim
