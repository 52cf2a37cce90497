#include <doctest.h>

#include "gradim/parse.hpp"
#include "gradim/random_objects.hpp"

using namespace gradim;

using PolyQ = GradedPolynomial<Rational>;
using HomQ = HomogeneousMatrix<Rational>;
using MatQ = Matrix<Rational>;

namespace {

PolyQ commutator(int n, int g1, int g2) {
    PolyQ f(n);
    f.declare(1, g1);
    f.declare(2, g2);
    f.add_term(Rational(1), {1, 2});
    f.add_term(Rational(-1), {2, 1});
    return f;
}

}  // namespace

TEST_CASE("parse basic forms") {
    auto f = parse_polynomial<Rational>("deg x1 = 1; deg x2 = 1; x1*x2 - x2*x1", 2);
    CHECK(f.modulus() == 2);
    CHECK(f == commutator(2, 1, 1));

    auto g = parse_polynomial<Rational>("deg x1=0;  3/2 * x1", 3);
    REQUIRE(g.monomials().size() == 1);
    CHECK(g.monomials()[0].coeff == Rational(3, 2));
    CHECK(g.monomials()[0].word == std::vector<int>{1});

    // Parenthesized products distribute; like monomials merge.
    auto h = parse_polynomial<Rational>("deg x1 = 1; deg x2 = 1; (x1 + x2)*(x1 - x2) + x2*x1", 2);
    PolyQ expect(2);
    expect.declare(1, 1);
    expect.declare(2, 1);
    expect.add_term(Rational(1), {1, 1});
    expect.add_term(Rational(-1), {1, 2});
    expect.add_term(Rational(2), {2, 1});
    expect.add_term(Rational(-1), {2, 2});
    CHECK(h == expect);

    // Degrees reduce mod n, including negatives.
    auto k = parse_polynomial<Rational>("deg x1 = -1; x1", 3);
    CHECK(k.degree_of(1) == 2);
    auto k2 = parse_polynomial<Rational>("deg x1 = 7; x1", 3);
    CHECK(k2.degree_of(1) == 1);
}

TEST_CASE("parse error positions and kinds") {
    CHECK_THROWS_AS(parse_polynomial<Rational>("deg x1 = 0; x1 + 1", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial<Rational>("3", 2), ParseError);
    // A parenthesized group is a polynomial, so it obeys the same rule.
    CHECK_THROWS_AS(parse_polynomial<Rational>("deg x1 = 0; (1/2 + 1)*x1", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial<Rational>("deg x1 = 0; x1*x2", 2), UnknownVariableError);
    CHECK_THROWS_AS(parse_polynomial<Rational>("deg x1 = 0; zeta3*x1", 2),
                    UnsupportedCoefficientError);
    CHECK_THROWS_AS(parse_polynomial<Rational>("deg x1 = 0; x1 +", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial<Rational>("deg x1 = 0; (x1", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial<Rational>("deg x0 = 0; x0", 2), DegreeOutOfRangeError);
    CHECK_THROWS_AS(parse_polynomial<Rational>("deg x1 = 0; zeta0*x1", 2),
                    DegreeOutOfRangeError);

    try {
        parse_polynomial<Rational>("deg x1 = 0; x1 @ x1", 2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 15);
    }

    // zeta2 is -1, fine in the rational backend.
    auto f = parse_polynomial<Rational>("deg x1 = 0; zeta2^1*x1", 2);
    CHECK(f.monomials()[0].coeff == Rational(-1));
}

TEST_CASE("parse cyclotomic and complex coefficients") {
    auto f = parse_polynomial<Cyclo>("deg x1 = 1; deg x2 = 1; x1*x2 - zeta3^1 * x2*x1", 3);
    REQUIRE(f.monomials().size() == 2);
    CHECK(f.monomials()[0].coeff == Cyclo(1));
    CHECK(f.monomials()[1].coeff == -Cyclo::zeta(3));

    auto g = parse_polynomial<ComplexScalar>("deg x1 = 0; i*x1 + 0.5*x1", 2);
    REQUIRE(g.monomials().size() == 1);
    CHECK(g.monomials()[0].coeff == ComplexScalar(0.5, 1.0));

    // Whitespace and newlines are insignificant.
    auto h = parse_polynomial<Cyclo>("deg x1=1; deg x2=1;\nx1*x2 - zeta3^1 * x2*x1", 3);
    CHECK(h.monomials().size() == 2);
    CHECK(h.degree_of(1) == 1);
    CHECK(h.degree_of(2) == 1);
}

TEST_CASE("canonical monomial order is length then lex") {
    auto f = parse_polynomial<Rational>(
        "deg x1 = 0; deg x2 = 0; x2*x1*x1 + x1 + x2*x2 + x1*x2", 2);
    std::vector<std::vector<int>> words;
    for (const auto& m : f.monomials()) words.push_back(m.word);
    std::vector<std::vector<int>> expect{{1}, {1, 2}, {2, 2}, {2, 1, 1}};
    CHECK(words == expect);
}

TEST_CASE("predicates: homogeneous, multilinear, weighted") {
    auto f = commutator(2, 1, 1);
    CHECK(f.homogeneous_degree() == 0);
    CHECK(f.is_multilinear());
    CHECK(f.multidegree() == std::vector<int>{1, 1});

    auto g = parse_polynomial<Rational>("deg x1 = 0; deg x2 = 1; x1 + x2", 2);
    CHECK(!g.homogeneous_degree().has_value());
    CHECK(!g.is_multilinear());  // occurrence vectors differ between terms

    auto sq = parse_polynomial<Rational>("deg x1 = 1; x1*x1", 2);
    CHECK(sq.homogeneous_degree() == 0);
    CHECK(!sq.is_multilinear());
    CHECK(sq.multidegree() == std::vector<int>{2});

    auto w = parse_polynomial<Rational>("deg x1 = 1; deg x2 = 0; x1*x1*x2", 2);
    std::map<int, Rational> unit_w{{1, Rational(1)}, {2, Rational(1)}};
    CHECK(w.weighted_degree(unit_w) == Rational(3));
    std::map<int, Rational> skew{{1, Rational(1)}, {2, Rational(2)}};
    CHECK(w.weighted_degree(skew) == Rational(4));

    auto mixed = parse_polynomial<Rational>("deg x1 = 1; deg x2 = 0; x1*x1 + x1*x2", 2);
    CHECK(mixed.weighted_degree(unit_w) == Rational(2));
    CHECK(!mixed.weighted_degree(skew).has_value());
}

TEST_CASE("evaluate on homogeneous arguments") {
    // Commutator of two diagonal matrices vanishes.
    auto f = commutator(3, 0, 0);
    std::map<int, HomQ> a;
    a.emplace(1, HomQ(3, 0, {Rational(1), Rational(2), Rational(3)}));
    a.emplace(2, HomQ(3, 0, {Rational(-1), Rational(5), Rational(0)}));
    CHECK(f.evaluate(a).is_zero());

    // x1*x2 + x2*x1 at (E12, E21) in M_2 gives the identity.
    auto central = parse_polynomial<Rational>("deg x1 = 1; deg x2 = 1; x1*x2 + x2*x1", 2);
    std::map<int, HomQ> b;
    b.emplace(1, HomQ::unit(2, 1, 1));
    b.emplace(2, HomQ::unit(2, 1, 2));
    CHECK(central.evaluate(b) == MatQ::identity(2));

    std::map<int, HomQ> wrong;
    wrong.emplace(1, HomQ::unit(2, 0, 1));
    wrong.emplace(2, HomQ::unit(2, 1, 2));
    CHECK_THROWS_AS(central.evaluate(wrong), DegreeMismatchError);

    std::map<int, HomQ> missing;
    missing.emplace(1, HomQ::unit(2, 1, 1));
    CHECK_THROWS_AS(central.evaluate(missing), MissingAssignmentError);
}

TEST_CASE("generic evaluation shapes") {
    // A single degree-1 variable in M_2.
    auto f = parse_polynomial<Rational>("deg x1 = 1; x1", 2);
    auto gm = f.evaluate_generic();
    CHECK(gm(0, 0).is_zero());
    CHECK(gm(1, 1).is_zero());
    CHECK(gm(0, 1) == MultiPoly<Rational>::variable(VarKey{1, 1, 2}));
    CHECK(gm(1, 0) == MultiPoly<Rational>::variable(VarKey{1, 2, 1}));

    // The degree-0 commutator is a graded identity: generic value zero.
    CHECK(commutator(2, 0, 0).evaluate_generic().is_zero());
    CHECK(!commutator(2, 1, 1).evaluate_generic().is_zero());

    // x1*x2 + x2*x1 with deg (1,1) in M_2: both diagonal entries are
    // y12^(1) y21^(2) + y12^(2) y21^(1) with row-matched indices.
    auto central = parse_polynomial<Rational>("deg x1 = 1; deg x2 = 1; x1*x2 + x2*x1", 2);
    auto cm = central.evaluate_generic();
    MultiPoly<Rational> d11 =
        MultiPoly<Rational>::variable(VarKey{1, 1, 2}) * MultiPoly<Rational>::variable(VarKey{2, 2, 1}) +
        MultiPoly<Rational>::variable(VarKey{2, 1, 2}) * MultiPoly<Rational>::variable(VarKey{1, 2, 1});
    MultiPoly<Rational> d22 =
        MultiPoly<Rational>::variable(VarKey{1, 2, 1}) * MultiPoly<Rational>::variable(VarKey{2, 1, 2}) +
        MultiPoly<Rational>::variable(VarKey{2, 2, 1}) * MultiPoly<Rational>::variable(VarKey{1, 1, 2});
    CHECK(cm(0, 0) == d11);
    CHECK(cm(1, 1) == d22);
    CHECK(cm(0, 1).is_zero());

    // Shared generic matrices collapse same-degree variables.
    auto collapsed = commutator(2, 1, 1).evaluate_generic(false);
    CHECK(collapsed.is_zero());
}

TEST_CASE("generic evaluation agrees with concrete evaluation") {
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng.below(3));
        auto f = random_scan_polynomial<Rational>(rng, n, 3);
        auto gm = f.evaluate_generic();
        std::map<int, HomQ> assign;
        std::map<VarKey, Rational> point;
        for (const auto& [id, deg] : f.variables()) {
            HomQ h = random_homogeneous<Rational>(rng, n, deg);
            for (int i = 1; i <= n; ++i)
                point[VarKey{id, i, mod_index(i - 1 + deg, n) + 1}] = h.gamma(i);
            assign.emplace(id, h);
        }
        MatQ direct = f.evaluate(assign);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(gm(i, j).eval(point) == direct(i, j));
    }
}

TEST_CASE("matrix unit enumeration") {
    auto single = parse_polynomial<Rational>("deg x1 = 1; x1", 2);
    auto items = matrix_unit_evaluations(single);
    REQUIRE(items.size() == 2);
    CHECK(items[0].value == MatQ::unit(2, 1, 2));
    CHECK(items[1].value == MatQ::unit(2, 2, 1));

    auto f = commutator(2, 1, 1);
    auto evals = matrix_unit_evaluations(f);
    REQUIRE(evals.size() == 4);
    int zeros = 0, diags = 0;
    for (const auto& it : evals) {
        if (it.value.is_zero())
            ++zeros;
        else if (it.value == MatQ::unit(2, 1, 1) - MatQ::unit(2, 2, 2) ||
                 it.value == MatQ::unit(2, 2, 2) - MatQ::unit(2, 1, 1))
            ++diags;
    }
    CHECK(zeros == 2);
    CHECK(diags == 2);

    auto sq = parse_polynomial<Rational>("deg x1 = 1; x1*x1", 2);
    CHECK_THROWS_AS(matrix_unit_evaluations(sq), NotMultilinearError);
}

TEST_CASE("values of a homogeneous polynomial are homogeneous") {
    Rng rng(29);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng.below(4));
        auto f = random_scan_polynomial<Rational>(rng, n, 3);
        auto d = f.homogeneous_degree();
        REQUIRE(d.has_value());  // multilinear generators share one word multiset
        std::map<int, HomQ> assign;
        for (const auto& [id, deg] : f.variables())
            assign.emplace(id, random_homogeneous<Rational>(rng, n, deg));
        auto h = classify_homogeneity(f.evaluate(assign));
        CHECK(h.is_homogeneous());
        if (h.kind == Homogeneity::Graded) CHECK(h.degree == *d);
    }
}

TEST_CASE("multilinearity in each slot") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng.below(3));
        auto f = random_scan_polynomial<Rational>(rng, n, 3);
        std::map<int, HomQ> a;
        for (const auto& [id, deg] : f.variables())
            a.emplace(id, random_homogeneous<Rational>(rng, n, deg));
        int slot = f.variables().begin()->first;
        int deg = f.degree_of(slot);
        HomQ u = random_homogeneous<Rational>(rng, n, deg);
        HomQ v = random_homogeneous<Rational>(rng, n, deg);
        auto a1 = a, a2 = a, asum = a;
        a1.at(slot) = u;
        a2.at(slot) = v;
        asum.at(slot) = u + v;
        CHECK(f.evaluate(asum) == f.evaluate(a1) + f.evaluate(a2));
    }
}

TEST_CASE("conjugation equivariance") {
    Rng rng(37);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + static_cast<int>(rng.below(3));
        auto f = random_scan_polynomial<Rational>(rng, n, 3);
        std::map<int, HomQ> a;
        for (const auto& [id, deg] : f.variables())
            a.emplace(id, random_homogeneous<Rational>(rng, n, deg));
        int gu = static_cast<int>(rng.below(n));
        HomQ u = random_invertible_homogeneous<Rational>(rng, n, gu);
        std::map<int, HomQ> conj;
        for (const auto& [id, h] : a)
            conj.emplace(id, project((u * h * u.inverse()).dense(), h.degree()));
        MatQ lhs = f.evaluate(conj);
        MatQ rhs = u.dense() * f.evaluate(a) * u.inverse().dense();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("parse print round-trip") {
    std::vector<std::string> corpus{
        "deg x1 = 1; deg x2 = 1; x1*x2 - x2*x1",
        "deg x1 = 0; x1",
        "deg x1 = 1; deg x2 = 0; deg x3 = 2; 2*x1*x2*x3 - 1/3*x3*x2*x1 + x2*x1*x3",
        "deg x1 = 1; x1*x1*x1",
    };
    for (const auto& text : corpus) {
        auto f = parse_polynomial<Rational>(text, 3);
        auto printed = print_polynomial(f);
        CHECK(parse_polynomial<Rational>(printed, 3) == f);
        CHECK(print_polynomial(parse_polynomial<Rational>(printed, 3)) == printed);
    }

    auto fc = parse_polynomial<Cyclo>(
        "deg x1 = 1; deg x2 = 2; "
        "x1*x2 - zeta3^1*x2*x1 + 1/2*x1*x2*x1*x2 + zeta3^2*x1*x2*x1*x2",
        3);
    auto printed = print_polynomial(fc);
    CHECK(parse_polynomial<Cyclo>(printed, 3) == fc);

    auto fz = parse_polynomial<ComplexScalar>("deg x1 = 1; 0.25*x1 - 2*i*x1", 2);
    CHECK(parse_polynomial<ComplexScalar>(print_polynomial(fz), 2) == fz);

    Rng rng(41);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + static_cast<int>(rng.below(4));
        auto f = random_scan_polynomial<Rational>(rng, n, 4);
        CHECK(parse_polynomial<Rational>(print_polynomial(f), n) == f);
    }
}
