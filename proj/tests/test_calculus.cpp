#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/parser.hpp"
#include "ncforms/quantum.hpp"
#include "ncforms/randomgen.hpp"

using namespace ncforms;

TEST_CASE("differential by letter replacement") {
    auto sig = free_signature(2);
    CHECK(differential(parse_form("x1*x2", sig)) == parse_form("y1*x2 + x1*y2", sig));
    CHECK(differential(parse_form("y1*x1", sig)) == parse_form("-y1*y1", sig));
    // squared differential vanishes on random words
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        Form w = Form::word(sig, random_word(rng, all_slots(sig), 5));
        CHECK(differential(differential(w)).is_zero());
    }
}

TEST_CASE("graded differential sign") {
    auto sig = free_signature(1, {1}); // x1 odd
    CHECK(differential(parse_form("x1^2", sig)) == parse_form("y1*x1 - x1*y1", sig));
}

TEST_CASE("homotopy homomorphism on generators and products") {
    auto sig = free_signature(1);
    CHECK(apply_At(parse_form("x1", sig)) == parse_extended("t*x1", sig));
    CHECK(apply_At(parse_form("y1", sig)) == parse_extended("t*y1 + tau*x1", sig));
    CHECK(apply_At(parse_form("x1*y1", sig)) ==
          parse_extended("t^2*x1*y1 + tau*t*x1^2", sig));
}

TEST_CASE("tau is a square-zero graded-central letter") {
    auto sig = free_signature(1);
    CHECK(parse_extended("tau*tau", sig).is_zero());
    CHECK(parse_extended("tau*x1", sig) == parse_extended("x1*tau", sig));
    CHECK(parse_extended("tau*y1", sig) == parse_extended("-y1*tau", sig));
}

TEST_CASE("integration over the interval") {
    auto sig = free_signature(1);
    CHECK(homotopy_I(parse_extended("t^3*x1", sig)).is_zero());
    CHECK(homotopy_I(parse_extended("tau*t^2*x1", sig)) ==
          parse_form("1/3*x1", sig));
    // dI + Id kills pure tau-parts
    for (int m = 0; m <= 3; ++m) {
        ExtendedForm w = parse_extended("tau*t^" + std::to_string(m) + "*x1*y1", sig);
        Form lhs = differential(homotopy_I(w)) + homotopy_I(differential_ext(w));
        CHECK(lhs.is_zero());
    }
}

TEST_CASE("extended multiplication is associative and unital") {
    for (bool graded : {false, true}) {
        auto sig = graded ? free_signature(2, {1, 0}) : free_signature(2);
        Rng rng(graded ? 61 : 67);
        ExtendedForm one = ExtendedForm::from_form(Form::one(sig));
        for (int i = 0; i < 60; ++i) {
            ExtendedForm a = random_extended_form(rng, sig, all_slots(sig), 3, 2);
            ExtendedForm b = random_extended_form(rng, sig, all_slots(sig), 3, 2);
            ExtendedForm c = random_extended_form(rng, sig, all_slots(sig), 3, 2);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * one == a);
            CHECK(one * a == a);
        }
    }
}

TEST_CASE("the homotopy homomorphism is multiplicative") {
    for (bool graded : {false, true}) {
        auto sig = graded ? free_signature(2, {1, 1}) : free_signature(2);
        Rng rng(graded ? 73 : 79);
        for (int i = 0; i < 60; ++i) {
            Form a = random_form(rng, sig, all_slots(sig), 3, 2);
            Form b = random_form(rng, sig, all_slots(sig), 3, 2);
            CHECK(apply_At(a * b) == apply_At(a) * apply_At(b));
        }
    }
}

TEST_CASE("homotopy residual vanishes") {
    auto sig = free_signature(2);
    CHECK(homotopy_residual(parse_extended("tau*t*x1", sig)).is_zero());
    CHECK(homotopy_residual(parse_extended("t^3*y1*y2", sig)).is_zero());
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        ExtendedForm w = random_extended_form(rng, sig, all_slots(sig), 4, 3);
        CHECK(homotopy_residual(w).is_zero());
    }
}

TEST_CASE("primitive of a closed form") {
    auto sig = free_signature(1);
    {
        Primitive p = poincare_primitive(parse_form("y1", sig));
        CHECK(p.primitive == parse_form("x1", sig));
        CHECK(p.remainder.is_zero());
    }
    {
        Primitive p = poincare_primitive(parse_form("x1*y1 + y1*x1", sig));
        CHECK(p.primitive == parse_form("x1^2", sig));
        CHECK(p.remainder.is_zero());
        CHECK(differential(p.primitive) == parse_form("x1*y1 + y1*x1", sig));
    }
    {
        Primitive p = poincare_primitive(parse_form("5", sig));
        CHECK(p.primitive.is_zero());
        CHECK(p.remainder == Scalar::rational(sig->params(), 5));
    }
    CHECK_THROWS_AS(poincare_primitive(parse_form("x1*y1", sig)), NotClosedError);
}

TEST_CASE("inhomogeneous relations have no homotopy") {
    RewriteSystem weyl = weyl_algebra(1);
    CHECK_FALSE(at_preserves_relations(weyl));
    Form closed = differential(parse_form("q1^2", weyl.sig(), &weyl), weyl);
    CHECK_THROWS_AS(poincare_primitive(closed, &weyl), IncompatibleRelationsError);
}

TEST_CASE("exact reconstruction over random closed forms") {
    auto sig = free_signature(3, {0, 1, 0});
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Form nu = random_form_py_capped(rng, sig, all_slots(sig), 4, 3, 3);
        Form a = differential(nu);
        Primitive p = poincare_primitive(a);
        CHECK(differential(p.primitive) == a);
        CHECK(p.remainder.is_zero());
    }
}
