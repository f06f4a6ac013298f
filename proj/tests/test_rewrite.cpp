#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/parser.hpp"
#include "ncforms/quantum.hpp"
#include "ncforms/randomgen.hpp"
#include "ncforms/suites.hpp"

using namespace ncforms;

TEST_CASE("weyl normal ordering") {
    RewriteSystem w = weyl_algebra(1);
    auto sig = w.sig();
    CHECK(w.normalize(parse_form("p1*q1", sig)) == parse_form("q1*p1 + h", sig));
    // differentials commute with points and collect on the left
    CHECK(w.normalize(parse_form("q1*dp1", sig)) == parse_form("dp1*q1", sig));
    CHECK(w.normalize(parse_form("dp1*q1", sig)) == parse_form("dp1*q1", sig));
    CHECK(w.normalize(parse_form("dp1*dp1", sig)).is_zero());
    CHECK(w.normalize(parse_form("dq1*dp1 + dp1*dq1", sig)).is_zero());
}

TEST_CASE("q-space normal ordering") {
    RewriteSystem q = q_algebra(QMatrix::symbolic(2));
    auto sig = q.sig();
    CHECK(q.normalize(parse_form("x2*x1", sig)) ==
          parse_form("Q[1,2]^-1*x1*x2", sig));
    CHECK(q.normalize(parse_form("dx1*dx1", sig)).is_zero());
    CHECK(q.normalize(parse_form("x1*dx2", sig)) ==
          parse_form("Q[1,2]*dx2*x1", sig));
}

TEST_CASE("enveloping-algebra ordering") {
    RewriteSystem aff = aff1_complex();
    auto sig = aff.sig();
    CHECK(aff.normalize(parse_form("e2*e1", sig)) == parse_form("e1*e2 - e2", sig));
}

TEST_CASE("free system is trivially confluent") {
    auto sig = free_signature(2);
    RewriteSystem free_sys(sig, "free");
    CHECK(check_local_confluence(free_sys, 3).empty());
    Form a = parse_form("x1*y2*x2", sig);
    CHECK(free_sys.normalize(a) == a);
}

TEST_CASE("engineered overlap is reported with the minimal word") {
    RewriteSystem broken = broken_demo_system();
    Report rep = check_local_confluence(broken, 3);
    REQUIRE_FALSE(rep.empty());
    CHECK(rep.items.front().what == "p*q^2");
}

TEST_CASE("rules must decrease the termination measure") {
    auto sig = free_signature(1);
    RewriteSystem sys(sig, "bad");
    uint32_t y = sig->require_slot("y1"), x = sig->require_slot("x1");
    // y < x in the order, so rewriting y*x to x*y raises the inversion count
    CHECK_THROWS_AS(sys.add_rule(y, x, Form::word(sig, {x, y})), RewriteError);
    // same-length image with equal measure is rejected as well
    CHECK_THROWS_AS(sys.add_rule(x, y, Form::word(sig, {x, y})), RewriteError);
    // a proper swap is accepted once, duplicates are not
    sys.add_rule(x, y, Form::word(sig, {y, x}));
    CHECK_THROWS_AS(sys.add_rule(x, y, Form::word(sig, {y, x})), RewriteError);
}

TEST_CASE("normalize is idempotent and respects products") {
    RewriteSystem w = weyl_algebra(2);
    auto sig = w.sig();
    Rng rng(19);
    for (int i = 0; i < 50; ++i) {
        Form a = random_form(rng, sig, all_slots(sig), 4, 3);
        Form b = random_form(rng, sig, all_slots(sig), 3, 2);
        Form na = w.normalize(a);
        CHECK(w.normalize(na) == na);
        CHECK(w.normalize(a * b) == w.normalize(w.normalize(a) * w.normalize(b)));
        CHECK(w.normalize(a, Strategy::leftmost) == w.normalize(a, Strategy::rightmost));
    }
}

TEST_CASE("d-compatibility audit flags a missing anticommutator") {
    // gl-style moving rule without the differential anticommutators
    auto params = empty_params();
    std::vector<GeneratorInfo> gens(4);
    gens[0] = {"M1", 1, 1, 2, -1};
    gens[1] = {"M2", 1, 1, 3, -1};
    gens[2] = {"a1", 0, 0, -1, 0};
    gens[3] = {"a2", 0, 0, -1, 1};
    auto sig = std::make_shared<const Signature>(std::move(gens), params);
    RewriteSystem sys(sig, "gl-missing-anticommutator");
    // a2 a1 -> a1 a2 + a1  (a solvable bracket so d has work to do)
    sys.add_rule(3, 2, parse_form("a1*a2 + a1", sig));
    // moving rules: a_i past M_j
    sys.add_rule(2, 0, parse_form("M1*a1", sig));
    sys.add_rule(2, 1, parse_form("M2*a1 + M1", sig));
    sys.add_rule(3, 0, parse_form("M1*a2 - M1", sig));
    sys.add_rule(3, 1, parse_form("M2*a2", sig));
    Report rep = check_d_compatibility(sys);
    CHECK_FALSE(rep.empty());
}

TEST_CASE("normal words enumerate the quotient basis") {
    RewriteSystem w = weyl_algebra(1);
    auto pts = point_slots(w.sig());
    auto words = w.normal_words(pts, 2);
    // 1, q, p, q^2, qp, p^2
    CHECK(words.size() == 6);
    for (const auto &word : words) {
        Form f = Form::word(w.sig(), word);
        CHECK(w.normalize(f) == f);
    }
}
