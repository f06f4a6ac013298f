#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/parser.hpp"
#include "ncforms/quantum.hpp"
#include "ncforms/randomgen.hpp"

using namespace ncforms;

TEST_CASE("quantum partial derivatives") {
    RewriteSystem w = weyl_algebra(1);
    auto sig = w.sig();
    uint32_t p1 = sig->require_slot("p1"), q1 = sig->require_slot("q1");
    Form H = parse_form("p1*q1", sig);
    CHECK(weyl_partial(H, p1, w) == parse_form("q1", sig));
    CHECK(weyl_partial(H, q1, w) == parse_form("p1", sig));
    CHECK(weyl_partial(parse_form("q1^2", sig), p1, w).is_zero());
    CHECK_THROWS_AS(weyl_partial(parse_form("dq1", sig), p1, w), RewriteError);
}

TEST_CASE("mixed partials commute") {
    RewriteSystem w = weyl_algebra(2);
    auto sig = w.sig();
    auto pts = point_slots(sig);
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Form H = random_form(rng, sig, pts, 5, 3);
        for (uint32_t u : pts)
            for (uint32_t v : pts)
                CHECK(weyl_partial(weyl_partial(H, u, w), v, w) ==
                      weyl_partial(weyl_partial(H, v, w), u, w));
    }
}

TEST_CASE("quantum poincare through the normal symbol") {
    RewriteSystem w = weyl_algebra(1);
    auto sig = w.sig();
    {
        Primitive p = quantum_poincare(parse_form("dq1*p1 + dp1*q1", sig), w);
        CHECK(p.primitive == parse_form("q1*p1", sig));
        CHECK(p.remainder.is_zero());
    }
    {
        Primitive p = quantum_poincare(parse_form("h", sig), w);
        CHECK(p.primitive.is_zero());
        CHECK(p.remainder == Scalar::param(sig->params(), "h"));
    }
    {
        Primitive p = quantum_poincare(parse_form("dq1*q1", sig), w);
        CHECK(p.primitive == parse_form("1/2*q1^2", sig));
    }
    CHECK_THROWS_AS(quantum_poincare(parse_form("dq1*p1", sig), w), NotClosedError);
}

TEST_CASE("normal-symbol transfer is exact to degree five") {
    RewriteSystem w = weyl_algebra(2);
    RewriteSystem shadow = w.quadratic_shadow();
    auto pts = point_slots(w.sig());
    int checked = 0;
    for (const Word &word : w.normal_words(pts, 5)) {
        Form f = Form::word(w.sig(), word);
        CHECK(differential(f, w) == differential(f, shadow));
        ++checked;
    }
    CHECK(checked == 126); // all normal monomials of degree <= 5 in 4 letters
}

TEST_CASE("lie data validation") {
    auto t = lie_param_table();
    LieData bad(2, 2, t);
    bad.set_c(0, 1, 0, Scalar::integer(t, 1));
    // arbitrary non-representation matrices fail the representation condition
    bad.set_A(0, 0, 0, Scalar::integer(t, 1));
    bad.set_A(1, 1, 1, Scalar::integer(t, 1));
    CHECK_THROWS_AS(bad.validate(), RewriteError);

    LieData nonjacobi(3, 2, t);
    nonjacobi.set_c(0, 1, 2, Scalar::integer(t, 1));
    nonjacobi.set_c(1, 2, 0, Scalar::integer(t, 1));
    nonjacobi.set_c(0, 2, 0, Scalar::integer(t, 1));
    CHECK_THROWS_AS(nonjacobi.validate(), RewriteError);
}

TEST_CASE("clebsch images in the quantum algebra") {
    LieData gl2 = lie_gl(2);
    auto t = gl2.params();
    ClebschImages im = clebsch_build(gl2, Scalar::param(t, "k"));
    auto sig = im.sys.sig();
    // e_{11} is the first basis element (row-major), image h^-1 F1 G1
    CHECK(im.e[0] == parse_form("h^-1*F1*G1", sig));
    CHECK(im.f[0] == parse_form("k*h^-1*G1", sig));
}

TEST_CASE("bracket kernel identity") {
    RewriteSystem sys = clebsch_algebra({0, 0});
    auto sig = sys.sig();
    auto comm = [&](const Form &a, const Form &b) { return a * b - b * a; };
    // [F^a G_b, F^m G_n] = h(-d^m_b F^a G_n + d^a_n F^m G_b)
    Form lhs = comm(parse_form("F1*G2", sig), parse_form("F2*G1", sig));
    Form want = parse_form("h*F2*G2 - h*F1*G1", sig);
    CHECK(sys.normalize(lhs - want).is_zero());
    Form lhs2 = comm(parse_form("F1*G1", sig), parse_form("F2*G2", sig));
    CHECK(sys.normalize(lhs2).is_zero());
}

TEST_CASE("fermionic pair anticommutator") {
    RewriteSystem sys = clebsch_algebra({1, 1});
    auto sig = sys.sig();
    Form a = parse_form("F1*G1 + G1*F1", sig);
    CHECK(sys.normalize(a) == parse_form("-h", sig));
    CHECK(sys.normalize(parse_form("F1*F1", sig)).is_zero());
}

TEST_CASE("clebsch residuals vanish for the shipped data") {
    CHECK(clebsch_verify(lie_aff1()).empty());
    CHECK(clebsch_verify(lie_sl2()).empty());
    CHECK(clebsch_verify(lie_gl(2)).empty());
    CHECK(clebsch_verify(lie_so3()).empty());
    CHECK(clebsch_verify(lie_sl2(), true).empty());
    CHECK(clebsch_verify(lie_gl(2, {1, 1})).empty());
    CHECK(clebsch_verify(lie_gl(2, {1, 1}), true).empty());
}
