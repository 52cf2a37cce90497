#include <doctest.h>

#include "gradim/matrix.hpp"
#include "gradim/random_objects.hpp"
#include "gradim/rng.hpp"

using namespace gradim;

using MatQ = Matrix<Rational>;
using HomQ = HomogeneousMatrix<Rational>;

TEST_CASE("grading degrees") {
    Grading g(3);
    CHECK(g.degree(1, 2) == 1);
    CHECK(g.degree(3, 1) == 1);  // wraps: 1 - 3 = -2 = 1 mod 3
    CHECK(g.degree(2, 2) == 0);
    CHECK(g.degree(1, 3) == 2);
}

TEST_CASE("projection picks out wrapped diagonals") {
    MatQ id = MatQ::identity(3);
    HomQ p0 = project(id, 0);
    CHECK(p0.degree() == 0);
    for (int i = 1; i <= 3; ++i) CHECK(p0.gamma(i) == 1);

    HomQ p1 = project(MatQ::unit(3, 1, 2), 1);
    CHECK(p1.gamma(1) == 1);
    CHECK(p1.gamma(2) == 0);
    CHECK(p1.gamma(3) == 0);

    // E_31 sits in degree 1 for n = 3, at row 3.
    HomQ w = project(MatQ::unit(3, 3, 1), 1);
    CHECK(w.gamma(3) == 1);
    CHECK(w.gamma(1) == 0);

    // Projections over all degrees reconstruct the matrix.
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        MatQ a(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = random_scalar<Rational>(rng);
        MatQ sum(3);
        for (int g = 0; g < 3; ++g) sum = sum + project(a, g).dense();
        CHECK(sum == a);
    }
}

TEST_CASE("homogeneity classification") {
    CHECK(classify_homogeneity(MatQ::identity(2)).kind == Homogeneity::Graded);
    CHECK(classify_homogeneity(MatQ::identity(2)).degree == 0);

    MatQ offdiag = MatQ::unit(2, 1, 2) + MatQ::unit(2, 2, 1);
    auto h = classify_homogeneity(offdiag);
    CHECK(h.kind == Homogeneity::Graded);
    CHECK(h.degree == 1);

    MatQ mixed = MatQ::unit(2, 1, 1) + MatQ::unit(2, 1, 2);
    CHECK(classify_homogeneity(mixed).kind == Homogeneity::Mixed);
    CHECK(!classify_homogeneity(mixed).is_homogeneous());

    CHECK(classify_homogeneity(MatQ(2)).kind == Homogeneity::Zero);
    CHECK(classify_homogeneity(MatQ(2)).is_homogeneous());
}

TEST_CASE("shift conjugation permutes matrix units") {
    // N^{-1} E_{i,j} N = E_{i+1,j+1}, indices wrapped.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(MatQ::unit(3, i, j).shift_conjugate(1) == MatQ::unit(3, i + 1, j + 1));

    Rng rng(5);
    MatQ a(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = random_scalar<Rational>(rng);
    CHECK(a.shift_conjugate(4) == a);
    CHECK(a.shift_conjugate(1).shift_conjugate(3) == a);
    CHECK(a.shift_conjugate(-1).shift_conjugate(1) == a);

    // On a component, conjugation by N^k rotates the coefficient vector.
    HomQ m(3, 1, {Rational(1), Rational(2), Rational(3)});
    HomQ s = m.shift_conjugate(1);
    CHECK(s.gamma(1) == 3);
    CHECK(s.gamma(2) == 1);
    CHECK(s.gamma(3) == 2);
    CHECK(s.dense() == m.dense().shift_conjugate(1));
}

TEST_CASE("diagonal conjugation") {
    MatQ e12 = MatQ::unit(2, 1, 2);
    MatQ c = e12.diag_conjugate({Rational(1), Rational(2)});
    CHECK(c(0, 1) == Rational(1, 2));

    CHECK_THROWS_AS(e12.diag_conjugate({Rational(1), Rational(0)}), ZeroDiagonalEntryError);
    CHECK_THROWS_AS(e12.diag_conjugate({Rational(1)}), DimensionError);

    // Conjugation preserves the degree of homogeneous matrices.
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + static_cast<int>(rng.below(4));
        int g = static_cast<int>(rng.below(n));
        HomQ m = random_homogeneous<Rational>(rng, n, g);
        std::vector<Rational> d;
        for (int i = 0; i < n; ++i) d.push_back(random_nonzero_scalar<Rational>(rng));
        auto conj = m.dense().diag_conjugate(d);
        auto h = classify_homogeneity(conj);
        CHECK(h.is_homogeneous());
        if (h.kind == Homogeneity::Graded) CHECK(h.degree == g);
        auto shifted = m.dense().shift_conjugate(rng.int_in(0, 5));
        auto hs = classify_homogeneity(shifted);
        CHECK(hs.is_homogeneous());
        if (hs.kind == Homogeneity::Graded) CHECK(hs.degree == g);
    }
}

TEST_CASE("component products add degrees") {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng.below(5));
        int g = static_cast<int>(rng.below(n)), h = static_cast<int>(rng.below(n));
        HomQ a = random_homogeneous<Rational>(rng, n, g);
        HomQ b = random_homogeneous<Rational>(rng, n, h);
        HomQ p = a * b;
        CHECK(p.degree() == mod_index(g + h, n));
        CHECK(p.dense() == a.dense() * b.dense());
    }
}

TEST_CASE("component inverse") {
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + static_cast<int>(rng.below(4));
        int g = static_cast<int>(rng.below(n));
        HomQ u = random_invertible_homogeneous<Rational>(rng, n, g);
        CHECK((u * u.inverse()).dense() == MatQ::identity(n));
        CHECK((u.inverse() * u).dense() == MatQ::identity(n));
    }
}

TEST_CASE("trace and determinant") {
    MatQ offdiag = MatQ::unit(2, 1, 2) + MatQ::unit(2, 2, 1);
    CHECK(offdiag.trace() == 0);
    CHECK(offdiag.det() == Rational(-1));

    CHECK(MatQ::diagonal({Rational(1), Rational(-1), Rational(0)}).det() == 0);
    CHECK(MatQ::diagonal({Rational(2), Rational(3)}).trace() == 5);
    CHECK(MatQ::identity(4).det() == 1);
}

namespace {

Rational det_cofactor(const MatQ& a) {
    int n = a.size();
    if (n == 1) return a(0, 0);
    Rational acc(0);
    for (int j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        MatQ minor(n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = a(i, c);
            }
        }
        Rational term = a(0, j) * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("fraction-free determinant against cofactor expansion") {
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + static_cast<int>(rng.below(4));
        MatQ a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = random_scalar<Rational>(rng);
        CHECK(a.det() == det_cofactor(a));
    }
    // Multiplicativity.
    for (int t = 0; t < 30; ++t) {
        MatQ a(3), b(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a(i, j) = random_scalar<Rational>(rng);
                b(i, j) = random_scalar<Rational>(rng);
            }
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("complex determinant via LU") {
    Matrix<ComplexScalar> a(2);
    a(0, 0) = ComplexScalar(1.0);
    a(0, 1) = ComplexScalar(2.0);
    a(1, 0) = ComplexScalar(3.0);
    a(1, 1) = ComplexScalar(4.0);
    CHECK(a.det() == ComplexScalar(-2.0));

    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
        Matrix<ComplexScalar> m(3), w(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                m(i, j) = random_scalar<ComplexScalar>(rng);
                w(i, j) = random_scalar<ComplexScalar>(rng);
            }
        CHECK((m * w).det() == m.det() * w.det());
    }
}

TEST_CASE("cyclotomic matrices behave") {
    Cyclo z = Cyclo::zeta(3);
    Matrix<Cyclo> a(2);
    a(0, 0) = z;
    a(1, 1) = z * z;
    CHECK(a.det() == Cyclo(1));
    CHECK(a.trace() == z + z * z);
    CHECK(a.trace() == Cyclo(-1));
}

TEST_CASE("homogeneous matrix equality treats zero across degrees") {
    HomQ z1(3, 1), z2(3, 2);
    CHECK(z1 == z2);
    HomQ u = HomQ::unit(3, 1, 1);
    CHECK(!(u == z1));
    CHECK(u == project(u.dense(), 1));
}
