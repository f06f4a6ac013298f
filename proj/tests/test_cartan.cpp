#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/parser.hpp"
#include "ncforms/randomgen.hpp"

using namespace ncforms;

namespace {

Derivation field(const SignaturePtr &sig, int parity,
                 const std::vector<std::string> &values) {
    std::vector<Form> v;
    for (const auto &s : values) v.push_back(parse_form(s, sig));
    return Derivation(sig, parity, std::move(v));
}

} // namespace

TEST_CASE("extension of a vector field to forms") {
    auto sig = free_signature(1);
    Derivation X = field(sig, 0, {"x1^2"});
    CHECK(X.apply(parse_form("x1", sig)) == parse_form("x1^2", sig));
    CHECK(X.apply(parse_form("y1", sig)) == parse_form("y1*x1 + x1*y1", sig));
    CHECK(X.apply(parse_form("x1*x1", sig)) == parse_form("2*x1^3", sig));
}

TEST_CASE("bracket of vector fields") {
    auto sig = free_signature(1);
    Derivation X = field(sig, 0, {"x1"});
    Derivation Z = field(sig, 0, {"1"});
    CHECK(X.bracket(Z).value(0) == parse_form("-1", sig));
    CHECK(X.bracket(X).value(0).is_zero());
}

TEST_CASE("interior product on one variable") {
    auto sig = free_signature(3);
    Form f = parse_form("x1^2", sig), g = parse_form("x2", sig),
         h = parse_form("x3", sig);
    Derivation Xf = field(sig, 0, {"x1^2", "0", "0"});
    Derivation Xg = field(sig, 0, {"x2", "0", "0"});
    Derivation Xh = field(sig, 0, {"x3", "0", "0"});
    Form y = parse_form("y1", sig);
    CHECK(Xf.contract(y) == f);
    // two contractions produce a commutator
    CHECK(Xf.contract(Xg.contract(y * y)) == g * f - f * g);
    // three contractions: the alternating sum of the six orderings
    Form expect = h * g * f + g * f * h + f * h * g - h * f * g - f * g * h -
                  g * h * f;
    CHECK(Xf.contract(Xg.contract(Xh.contract(y * y * y))) == expect);
}

TEST_CASE("contraction of powers of a single differential") {
    auto sig = free_signature(1);
    Derivation del = field(sig, 0, {"1"});
    Form y = parse_form("y1", sig);
    Form even = Form::one(sig);
    for (int l = 0; l <= 3; ++l) {
        // y^{2l} contracts to zero, y^{2l+1} to y^{2l}
        CHECK(del.contract(even).is_zero());
        Form odd = even * y;
        CHECK(del.contract(odd) == even);
        even = odd * y;
    }
}

TEST_CASE("degree operator via contraction with d") {
    auto sig = free_signature(3);
    CHECK(d_contract(parse_form("y1*y2", sig)) == parse_form("2*y1*y2", sig));
    CHECK(d_contract(parse_form("x1", sig)).is_zero());
    CHECK(d_contract(parse_form("x1*y1 + y1*y2*y3", sig)) ==
          parse_form("x1*y1 + 3*y1*y2*y3", sig));
}

TEST_CASE("cartan formula residuals vanish") {
    auto sig = free_signature(2);
    Rng rng(9);
    for (int l = 1; l <= 3; ++l) {
        for (int i = 0; i < 20; ++i) {
            std::vector<Derivation> zs;
            for (int k = 0; k < l; ++k)
                zs.push_back(random_derivation(rng, sig, 0, true));
            Form w = random_form(rng, sig, all_slots(sig), 3, 2);
            CHECK(cartan_residual(zs, w).is_zero());
        }
    }
}

TEST_CASE("graded residual with one odd field") {
    auto sig = free_signature(2, {0, 1});
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        std::vector<Derivation> zs;
        zs.push_back(random_derivation(rng, sig, 1, true));
        zs.push_back(random_derivation(rng, sig, 0, true));
        zs.push_back(random_derivation(rng, sig, rng.coin(), true));
        Form w = random_form(rng, sig, all_slots(sig), 3, 2);
        CHECK(cartan_residual(zs, w).is_zero());
        CHECK(cartan_residual_graded(zs, w).is_zero());
    }
}

TEST_CASE("two-field formula written out independently") {
    // Z2 -| Z1 -| d(w) = Z1(Z2 -| w) - Z2(Z1 -| w) + d(Z2 -| Z1 -| w) - [Z1,Z2] -| w
    auto sig = free_signature(2);
    Rng rng(71);
    for (int i = 0; i < 40; ++i) {
        Derivation Z1 = random_derivation(rng, sig, 0, true);
        Derivation Z2 = random_derivation(rng, sig, 0, true);
        Form w = random_form(rng, sig, all_slots(sig), 4, 3);
        Form lhs = Z2.contract(Z1.contract(differential(w)));
        Form rhs = Z1.apply(Z2.contract(w)) - Z2.apply(Z1.contract(w)) +
                   differential(Z2.contract(Z1.contract(w))) -
                   Z1.bracket(Z2).contract(w);
        CHECK(lhs == rhs);
        CHECK(cartan_residual_ungraded({Z1, Z2}, w).is_zero());
    }
}

TEST_CASE("parity-inhomogeneous values are rejected") {
    auto sig = free_signature(1, {1});
    CHECK_THROWS_AS(field(sig, 0, {"x1 + 1"}), SignatureError);
}
