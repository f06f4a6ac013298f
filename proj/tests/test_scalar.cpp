#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/randomgen.hpp"
#include "ncforms/scalar.hpp"

using namespace ncforms;

namespace {
ParamTablePtr table_hq() {
    auto t = std::make_shared<ParamTable>();
    t->add("h");
    t->add("Q[1,2]", "Q[2,1]");
    return t;
}
} // namespace

TEST_CASE("additive inverse and rational arithmetic") {
    auto t = table_hq();
    Scalar h = Scalar::param(t, "h");
    CHECK((h + (-h)).is_zero());
    Scalar half = Scalar::rational(t, Rational(1, 2));
    Scalar third = Scalar::rational(t, Rational(1, 3));
    CHECK(half + third == Scalar::rational(t, Rational(5, 6)));
    Scalar q = Scalar::param(t, "Q[1,2]");
    CHECK(q + q == Scalar::param(t, "Q[1,2]", 1, Rational(2)));
}

TEST_CASE("inverse pairs collapse under multiplication") {
    auto t = table_hq();
    Scalar q12 = Scalar::param(t, "Q[1,2]");
    Scalar q21 = Scalar::param(t, "Q[2,1]");
    CHECK(q12 * q21 == Scalar::rational(t, 1));
    Scalar h = Scalar::param(t, "h");
    Scalar hinv = Scalar::param(t, "h", -1);
    CHECK(h * hinv == Scalar::rational(t, 1));
    Scalar a = Scalar::param(t, "h", 1, Rational(1, 2));
    Scalar b = Scalar::param(t, "h", 1, Rational(2));
    CHECK(a * b == Scalar::param(t, "h", 2));
}

TEST_CASE("ring axioms on randomized scalars") {
    auto t = table_hq();
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(rng, t), b = random_scalar(rng, t),
               c = random_scalar(rng, t);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("monomial inverse") {
    auto t = table_hq();
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Scalar m = random_coeff(rng, t);
        CHECK(m * m.monomial_inverse() == Scalar::rational(t, 1));
    }
    Scalar sum = Scalar::param(t, "h") + Scalar::rational(t, 1);
    CHECK_THROWS_AS(sum.monomial_inverse(), ScalarError);
}

TEST_CASE("canonical form is unique") {
    auto t = table_hq();
    Scalar a = Scalar::param(t, "h") + Scalar::rational(t, Rational(1, 2));
    Scalar b = Scalar::rational(t, Rational(1, 2)) + Scalar::param(t, "h");
    CHECK(a == b);
    CHECK(a.terms() == b.terms());
}

TEST_CASE("parameter table rules") {
    auto t = std::make_shared<ParamTable>();
    t->add("h");
    CHECK_THROWS_AS(t->add("h"), ScalarError);
    CHECK_THROWS_AS(t->add("x", "x"), ScalarError);
    t->add("Q[1,2]", "Q[2,1]");
    auto r = t->resolve("Q[2,1]");
    REQUIRE(r.has_value());
    CHECK(r->second == -1);
}

TEST_CASE("substitution") {
    auto t = std::make_shared<ParamTable>();
    t->add("lambda");
    t->add("mu");
    Scalar s = Scalar::param(t, "lambda") * Scalar::param(t, "mu", 2) -
               Scalar::param(t, "mu", 2, Rational(3));
    Scalar r = s.substitute({{"lambda", Rational(3)}});
    CHECK(r.is_zero());
    CHECK(s.substitute({{"lambda", Rational(1)}, {"mu", Rational(2)}}) ==
          Scalar::rational(t, Rational(-8)));
}

TEST_CASE("table mismatch is an error") {
    auto t1 = single_param("h");
    auto t2 = single_param("k");
    Scalar a = Scalar::param(t1, "h");
    Scalar b = Scalar::param(t2, "k");
    CHECK_THROWS_AS(a + b, ScalarError);
    CHECK_THROWS_AS(a * b, ScalarError);
}

TEST_CASE("lifting into a larger table") {
    auto t1 = single_param("h");
    auto t2 = table_hq();
    Scalar a = Scalar::param(t1, "h", -1, Rational(2, 3));
    Scalar lifted = lift_scalar(a, t2);
    CHECK(lifted == Scalar::param(t2, "h", -1, Rational(2, 3)));
    CHECK_THROWS_AS(lift_scalar(Scalar::param(t2, "Q[1,2]"), t1), ScalarError);
}
