#include <ramsey/errors.hpp>
#include <ramsey/lemma.hpp>

#include <doctest.h>

using namespace ramsey;

namespace {

auto header_value(const LemmaReport & r, const std::string & key) -> std::string
{
    for (const auto & [k, v] : r.header)
        if (k == key)
            return v;
    return "";
}

auto hole_params(LemmaId id, Rational nu, int n) -> LemmaParams
{
    LemmaParams p;
    p.id = id;
    p.alpha = 1;
    p.beta = 1;
    p.nu = nu;
    p.epsilon = parse_rational("0.0081");
    p.n = n;
    return p;
}

} // namespace

TEST_CASE("lemma names round-trip")
{
    for (auto id : {LemmaId::l2, LemmaId::double_hole, LemmaId::dwa, LemmaId::trzy, LemmaId::f1})
        CHECK(parse_lemma(lemma_name(id)) == id);
    CHECK_THROWS_AS(parse_lemma("lemma9"), ParseError);
}

TEST_CASE("parameters breaking a hypothesis are rejected")
{
    auto p = hole_params(LemmaId::dwa, 0, 40);
    p.alpha = Rational(1, 2), p.beta = Rational(1, 2);
    CHECK_THROWS_AS(lemma_harness(p, 1, 1), OutOfRange);

    p = hole_params(LemmaId::trzy, 0, 40);
    p.epsilon = Rational(1, 50);
    CHECK_THROWS_AS(lemma_harness(p, 1, 1), OutOfRange);

    LemmaParams l2;
    l2.id = LemmaId::l2;
    l2.n = 10, l2.n2 = 20;
    CHECK_THROWS_AS(lemma_harness(l2, 1, 1), OutOfRange);

    LemmaParams f1;
    f1.id = LemmaId::f1;
    f1.alpha = Rational(1, 2), f1.beta = 1;
    CHECK_THROWS_AS(lemma_harness(f1, 1, 1), OutOfRange);

    LemmaParams dbl;
    dbl.id = LemmaId::double_hole;
    dbl.nu = Rational(1, 2), dbl.nu2 = Rational(1, 4);
    CHECK_THROWS_AS(lemma_harness(dbl, 1, 1), OutOfRange);

    auto big = hole_params(LemmaId::dwa, 1, 300);
    CHECK_THROWS_AS(lemma_harness(big, 1, 1), OutOfRange);
}

TEST_CASE("derived sizes in the report header")
{
    auto r = lemma_harness(hole_params(LemmaId::dwa, 0, 40), 0, 1);
    CHECK(header_value(r, "N") == "71");
    CHECK(header_value(r, "|W|") == "0");
    CHECK(header_value(r, "colour-1 saturation needed") == "41");
    CHECK(header_value(r, "deleted edges") == "0");

    auto half = lemma_harness(hole_params(LemmaId::dwa, Rational(1, 2), 40), 0, 1);
    CHECK(header_value(half, "|W|") == "20");

    LemmaParams l2;
    l2.id = LemmaId::l2;
    l2.epsilon = Rational(1, 200);
    auto lr = lemma_harness(l2, 0, 1);
    CHECK(header_value(lr, "deleted edges") == "8");
    CHECK(header_value(lr, "component size needed") == "79");
    CHECK(header_value(lr, "matching edges needed") == "40");

    LemmaParams dbl;
    dbl.id = LemmaId::double_hole;
    dbl.n = 60, dbl.nu = Rational(3, 10), dbl.nu2 = Rational(3, 10), dbl.epsilon = Rational(1, 50);
    auto dr = lemma_harness(dbl, 0, 1);
    CHECK(header_value(dr, "|U1|") == "18");
    CHECK(header_value(dr, "deleted edges") == "0");
    CHECK(header_value(dr, "saturation needed") == "54");
    CHECK(dr.unmet_scale_conditions.size() == 2);
}

TEST_CASE("small harness runs hold and are thread independent")
{
    std::vector<LemmaParams> grid;
    LemmaParams l2;
    l2.id = LemmaId::l2, l2.n = 20, l2.n2 = 16, l2.epsilon = Rational(1, 150);
    grid.push_back(l2);
    LemmaParams dbl;
    dbl.id = LemmaId::double_hole, dbl.n = 24, dbl.nu = Rational(1, 4), dbl.nu2 = Rational(2, 3);
    dbl.epsilon = Rational(1, 20);
    grid.push_back(dbl);
    grid.push_back(hole_params(LemmaId::dwa, 1, 12));
    grid.push_back(hole_params(LemmaId::trzy, Rational(1, 2), 12));
    LemmaParams f1;
    f1.id = LemmaId::f1, f1.n = 10, f1.alpha = 1, f1.beta = Rational(1, 2), f1.epsilon = Rational(1, 400);
    grid.push_back(f1);

    for (const auto & p : grid) {
        CAPTURE(lemma_name(p.id));
        auto one = lemma_harness(p, 16, 77, 1, 20);
        auto many = lemma_harness(p, 16, 77, 8, 20);
        CHECK(one.passes + one.failures + one.rejected == 16);
        CHECK(one.uniform_samples == 8);
        CHECK(one.adversarial_samples == 8);
        CHECK(one.failures == 0);
        CHECK(one.min_slack >= 0);
        CHECK(one.passes == many.passes);
        CHECK(one.min_slack == many.min_slack);
        CHECK(one.header == many.header);
    }
}
