#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncforms/parser.hpp"
#include "ncforms/randomgen.hpp"

using namespace ncforms;

TEST_CASE("free product concatenates words") {
    auto sig = free_signature(2);
    Form x1 = parse_form("x1", sig), y1 = parse_form("y1", sig);
    CHECK(x1 * y1 == parse_form("x1*y1", sig));
    CHECK(parse_form("(x1 + x2)*y1", sig) == parse_form("x1*y1 + x2*y1", sig));
    CHECK(y1 * x1 != x1 * y1);
}

TEST_CASE("bigrading partitions terms") {
    auto sig = free_signature(3);
    Form a = parse_form("x1*y2*y3", sig);
    auto parts = a.bigrade();
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == std::make_pair(1, 2));

    Form b = parse_form("x1 + y1", sig);
    auto pb = b.bigrade();
    REQUIRE(pb.size() == 2);
    CHECK(pb.count({1, 0}) == 1);
    CHECK(pb.count({0, 1}) == 1);
    CHECK(pb[{1, 0}] == parse_form("x1", sig));
    CHECK(pb[{0, 1}] == parse_form("y1", sig));

    CHECK(Form::zero(sig).bigrade().empty());

    // reconstruction is lossless
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        Form f = random_form(rng, sig, all_slots(sig), 4, 4);
        Form sum(sig);
        for (const auto &[k, comp] : f.bigrade()) sum += comp;
        CHECK(sum == f);
    }
}

TEST_CASE("product is associative and unital, degrees add") {
    auto sig = free_signature(4);
    Rng rng(11);
    Form one = Form::one(sig);
    for (int i = 0; i < 60; ++i) {
        Form a = random_form(rng, sig, all_slots(sig), 4, 3);
        Form b = random_form(rng, sig, all_slots(sig), 4, 3);
        Form c = random_form(rng, sig, all_slots(sig), 4, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * one == a);
        CHECK(one * a == a);
    }
    // p_x and p_y add on homogeneous words
    for (int i = 0; i < 30; ++i) {
        Word wa = random_word(rng, all_slots(sig), 3);
        Word wb = random_word(rng, all_slots(sig), 3);
        Word wc(wa);
        wc.insert(wc.end(), wb.begin(), wb.end());
        CHECK(word_px(*sig, wc) == word_px(*sig, wa) + word_px(*sig, wb));
        CHECK(word_py(*sig, wc) == word_py(*sig, wa) + word_py(*sig, wb));
    }
}

TEST_CASE("word parity sums letter parities") {
    auto sig = free_signature(3, {0, 1, 1});
    // p(x2) = 1, p(y2) = 0, p(y1) = 1
    CHECK(word_z2(*sig, {sig->require_slot("x2")}) == 1);
    CHECK(word_z2(*sig, {sig->require_slot("y2")}) == 0);
    CHECK(word_z2(*sig, {sig->require_slot("y1")}) == 1);
    CHECK(word_z2(*sig, {sig->require_slot("x2"), sig->require_slot("y1")}) == 0);
}

TEST_CASE("signature mismatch is an error") {
    auto s2 = free_signature(2), s3 = free_signature(3);
    Form a = parse_form("x1", s2), b = parse_form("x1", s3);
    CHECK_THROWS_AS(a * b, SignatureError);
    CHECK_THROWS_AS(a + b, SignatureError);
}

TEST_CASE("canonical printing") {
    auto sig = free_signature(3);
    CHECK(parse_form("x1*x2 + x2*x1", sig).str() == "x1*x2 + x2*x1");
    CHECK(parse_form("y1*x2 + x1*y2", sig).str() == "y1*x2 + x1*y2");
    CHECK(parse_form("x1*y1 + y1*y2*y3", sig).str() == "x1*y1 + y1*y2*y3");
    CHECK(parse_form("x1^2 - x1^2", sig).str() == "0");
    CHECK(parse_form("x1*x1*x1", sig).str() == "x1^3");
    CHECK(parse_form("3 + x1", sig).str() == "x1 + 3");
    CHECK(parse_form("-x1 - 1/2", sig).str() == "-x1 - 1/2");
}

TEST_CASE("relabeling letters with signs") {
    auto sig = free_signature(2);
    std::vector<std::pair<int, uint32_t>> swap_xy(sig->size());
    // x1 <-> -x2, y1 <-> -y2
    swap_xy[sig->require_slot("x1")] = {-1, sig->require_slot("x2")};
    swap_xy[sig->require_slot("x2")] = {-1, sig->require_slot("x1")};
    swap_xy[sig->require_slot("y1")] = {-1, sig->require_slot("y2")};
    swap_xy[sig->require_slot("y2")] = {-1, sig->require_slot("y1")};
    Form a = parse_form("x1*y2 + x2", sig);
    CHECK(a.relabel(swap_xy) == parse_form("x2*y1 - x1", sig));
}
