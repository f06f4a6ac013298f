#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/json_io.hpp"
#include "ncforms/liecomplex.hpp"
#include "ncforms/parser.hpp"
#include "ncforms/randomgen.hpp"

#include <fstream>
#include <sstream>

using namespace ncforms;

TEST_CASE("expression grammar") {
    auto sig = free_signature(2);
    Form a = parse_form("x1*y2 + 3*x1^2", sig);
    CHECK(a.term_count() == 2);
    CHECK(parse_form("x1*x1", sig) == parse_form("x1^2", sig));
    CHECK(parse_form("dx1", sig) == parse_form("y1", sig));
    CHECK(parse_form("1/2*x1 - -1*x1", sig) == parse_form("3/2*x1", sig));
}

TEST_CASE("differential operator inside expressions") {
    RewriteSystem w = weyl_algebra(1);
    auto sig = w.sig();
    CHECK(parse_form("d(p1*q1)", sig, &w) == parse_form("dp1*q1 + p1*dq1", sig));
}

TEST_CASE("parse errors carry positions") {
    auto sig = free_signature(1);
    CHECK_THROWS_AS(parse_form("x1 +", sig), ParseError);
    CHECK_THROWS_AS(parse_form("z9", sig), ParseError);
    CHECK_THROWS_AS(parse_form("x1 * (y1", sig), ParseError);
    CHECK_THROWS_AS(parse_form("x1@2", sig), ParseError);
    CHECK_THROWS_AS(parse_form("tau", sig), ParseError); // only in extended mode
}

TEST_CASE("print-parse round trip is a fixed point") {
    Rng rng(59);
    auto sig = free_signature(3, {0, 1, 0});
    for (int i = 0; i < 80; ++i) {
        Form f = random_form(rng, sig, all_slots(sig), 4, 4);
        CHECK(parse_form(f.str(), sig) == f);
    }
    RewriteSystem w = weyl_algebra(2);
    for (int i = 0; i < 40; ++i) {
        Form f = w.normalize(random_form(rng, w.sig(), all_slots(w.sig()), 4, 3));
        CHECK(parse_form(f.str(), w.sig()) == f);
    }
    QMatrix Q = QMatrix::symbolic(2);
    RewriteSystem q = q_algebra(Q);
    for (int i = 0; i < 40; ++i) {
        Form f = q.normalize(random_form(rng, q.sig(), all_slots(q.sig()), 4, 3));
        CHECK(parse_form(f.str(), q.sig()) == f);
    }
}

TEST_CASE("presentation json round trip") {
    RewriteSystem w = weyl_algebra(1);
    std::string text = export_presentation(w);
    RewriteSystem back = load_presentation(text);
    CHECK(*back.sig() == *w.sig());
    CHECK(back.rules().size() == w.rules().size());
    Form f = parse_form("p1*q1*p1", w.sig());
    Form g = parse_form("p1*q1*p1", back.sig());
    CHECK(w.normalize(f).str() == back.normalize(g).str());
    CHECK(check_d_compatibility(back).empty());
}

TEST_CASE("lie data json") {
    std::string text = R"({
      "dim": 2, "repdim": 2,
      "c": [[1, 2, 2, "1"]],
      "A": [[1, 1, 1, "1"], [2, 1, 2, "1"]]
    })";
    LieData d = load_liedata(text);
    CHECK(d.dim() == 2);
    CHECK(clebsch_verify(d).empty());
}

TEST_CASE("q matrix json") {
    std::string text = R"({"n": 2, "entries": [[1, 2, "Q[1,2]^2"]]})";
    QMatrix m = load_qmatrix(text);
    CHECK(m.q(0, 1) == Scalar::param(m.params(), "Q[1,2]", 2));
    CHECK((m.q(0, 1) * m.q(1, 0)).is_one());
    CHECK_FALSE(qmatrix_json_has_group(text));

    std::string gtext = R"({"n": 2, "group": [2],
                            "entries": [[1, 2, [1], "Q[1,2;1]^3"]]})";
    CHECK(qmatrix_json_has_group(gtext));
    GroupQMatrix g = load_group_qmatrix(gtext);
    CHECK((g.q(0, 1, {1}) * g.q(1, 0, {1})).is_one());
}

TEST_CASE("general commutation constants load from a config") {
    std::ifstream in(std::string(NCFORMS_DATA_DIR) + "/weyl_general.json");
    std::stringstream ss;
    ss << in.rdbuf();
    RewriteSystem sys = load_presentation(ss.str());
    auto sig = sys.sig();
    CHECK(sys.normalize(parse_form("u2*u1", sig)) ==
          parse_form("u1*u2 - h*c[1,2]", sig));
    CHECK(check_d_compatibility(sys).empty());
    CHECK(check_local_confluence(sys, 3).empty());
    // inhomogeneous relations refuse the homotopy route
    CHECK_FALSE(at_preserves_relations(sys));
}

TEST_CASE("deformed complexes refuse the homotopy primitive") {
    RewriteSystem sub = gl_aff_subcomplex(GlVariant::left);
    Form closed = differential(parse_form("x^2", sub.sig(), &sub), sub);
    CHECK_THROWS_AS(poincare_primitive(closed, &sub), IncompatibleRelationsError);
    RewriteSystem gl = gl_complex(2, GlVariant::left);
    CHECK_THROWS_AS(
        quantum_poincare(Form::zero(gl.sig()), gl), IncompatibleRelationsError);
}

TEST_CASE("parser survives seeded garbage") {
    auto sig = free_signature(2);
    RewriteSystem w = weyl_algebra(1);
    const std::string alphabet = "xydpq12+-*/^()[]@, htau";
    Rng rng(101);
    int parsed_ok = 0;
    for (int i = 0; i < 3000; ++i) {
        std::string s;
        int len = 1 + rng.below(14);
        for (int k = 0; k < len; ++k)
            s.push_back(alphabet[rng.below(static_cast<int>(alphabet.size()))]);
        for (const SignaturePtr &sg : {sig, w.sig()}) {
            try {
                Form f = parse_form(s, sg);
                (void)f.str();
                ++parsed_ok;
            } catch (const ParseError &) {
            } catch (const SignatureError &) {
            } catch (const ScalarError &) {
            }
        }
    }
    CHECK(parsed_ok > 0); // some garbage is accidentally well-formed
}

TEST_CASE("suite results serialize deterministically") {
    SuiteResult r = run_suite("free-calculus", 99, 5, 3);
    std::string a = suite_result_json(r);
    std::string b = suite_result_json(run_suite("free-calculus", 99, 5, 3));
    CHECK(a == b);
    CHECK(a.find("\"ok\": true") != std::string::npos);
}
