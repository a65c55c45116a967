#include <ramsey/bounds.hpp>
#include <ramsey/errors.hpp>

#include <doctest.h>

#include <random>

using namespace ramsey;

namespace {

constexpr auto E = CycleParity::even;
constexpr auto O = CycleParity::odd;

auto q(const char * text) -> Rational
{
    return parse_rational(text);
}

auto triple(std::array<CycleParity, 3> p, std::array<Rational, 3> a, long n = 100) -> TargetTriple
{
    return TargetTriple{a, p, n};
}

} // namespace

TEST_CASE("rational parsing and rounding")
{
    CHECK(q("3/4") == Rational(3, 4));
    CHECK(q("0.125") == Rational(1, 8));
    CHECK(q("1e-4") == Rational(1, 10000));
    CHECK(q("-2") == -2);
    CHECK_THROWS_AS(q("abc"), ParseError);
    CHECK_THROWS_AS(q("1/0"), ParseError);
    CHECK(floor_of(Rational(-1, 2)) == -1);
    CHECK(ceil_of(Rational(-1, 2)) == 0);
    CHECK(to_string(Rational(3, 2)) == "3/2");
    auto s = sqrt_enclosure(q("0.0081"));
    CHECK(s.exact());
    CHECK(s.lo == Rational(9, 100));
    auto t = sqrt_enclosure(Rational(2));
    CHECK(! t.exact());
    CHECK(t.lo * t.lo < 2);
    CHECK(t.hi * t.hi > 2);
    CHECK(less_than_sqrt(Integer(2), Integer(5)));
    CHECK(! less_than_sqrt(Integer(3), Integer(9)));
    CHECK(less_than_sqrt(Integer(-1), Integer(0)));
}

TEST_CASE("floor to parity")
{
    CHECK(floor_parity(q("5.5"), O) == 5);
    CHECK(floor_parity(q("5.5"), E) == 4);
    CHECK(floor_parity(Rational(6), E) == 6);
    CHECK_THROWS_AS(floor_parity(Rational(2), O), UndefinedTarget);
    CHECK_THROWS_AS(floor_parity(Rational(1), E), UndefinedTarget);
}

TEST_CASE("theorem coefficient examples")
{
    CHECK(theorem_coefficient(triple({O, O, O}, {1, 1, 1})).value == 4);
    CHECK(theorem_coefficient(triple({E, E, O}, {1, 1, 1})).value == 3);
    auto c = theorem_coefficient(triple({E, O, O}, {1, 2, 2}));
    CHECK(c.value == 5);
    CHECK(c.theorem_case == TheoremCase::two_odd);
}

TEST_CASE("canonical order and permutation")
{
    auto c = canonicalize(triple({O, E, E}, {3, 1, 2}));
    CHECK(c.permutation == std::array<int, 3>{2, 1, 0});
    CHECK(c.triple.alphas[0] == 2);
    CHECK(c.triple.parities[2] == O);
    CHECK(c.theorem_case == TheoremCase::one_odd);
}

TEST_CASE("coefficient is symmetric and dominates every alpha")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        std::array<Rational, 3> a;
        std::array<CycleParity, 3> p;
        for (int i = 0; i < 3; ++i) {
            a[i] = Rational(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 10));
            p[i] = rng() % 2 ? O : E;
        }
        auto base = theorem_coefficient(triple(p, a, 1000)).value;
        CHECK(base >= std::max({a[0], a[1], a[2]}));
        std::array<int, 3> idx{0, 1, 2};
        while (std::next_permutation(idx.begin(), idx.end())) {
            auto perm = triple({p[idx[0]], p[idx[1]], p[idx[2]]}, {a[idx[0]], a[idx[1]], a[idx[2]]}, 1000);
            CHECK(theorem_coefficient(perm).value == base);
        }
    }
}

TEST_CASE("xi")
{
    CHECK(xi(1, 1, 0) == 2);
    CHECK(xi(1, 1, 1) == Rational(5, 2));
    CHECK(xi(2, 1, 0) == 4);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 1000; ++trial) {
        Rational a(1 + static_cast<long>(rng() % 20), 7), b(1 + static_cast<long>(rng() % 20), 5),
            nu(static_cast<long>(rng() % 20), 3);
        Rational half(1, 2);
        CHECK(xi(a, b, nu) >= half * a + half * b + std::max({half * a, half * b, nu}));
    }
}

TEST_CASE("lemma host size")
{
    auto eps = q("0.0001");
    CHECK(lemma_dwa_host_size({1, 1, 0, eps}, 100) == 153);
    CHECK(lemma_dwa_host_size({1, 1, 1, eps}, 100) == 203);
    CHECK(lemma_dwa_host_size({1, q("0.5"), 1, eps}, 100) == 178);
    // non-square epsilon rounds outward: 3 sqrt(0.0002) * 100 = 4.24...
    CHECK(lemma_dwa_host_size({1, 1, 0, q("0.0002")}, 100) == 155);

    CHECK_THROWS_AS(lemma_dwa_host_size({q("0.5"), q("0.5"), q("0.5"), eps}, 100), OutOfRange);
    CHECK_THROWS_AS(lemma_dwa_host_size({1, 1, 0, q("0.01")}, 100), OutOfRange);
    CHECK(lemma_trzy_host_size({1, 1, 0, q("0.0081")}, 40) == 98);
}

TEST_CASE("construction sizes")
{
    // m1 = 5 odd, all odd
    auto iv = construction_sizes(triple({O, O, O}, {q("0.05"), q("0.03"), q("0.03")}));
    REQUIRE(iv.size() == 1);
    CHECK(iv[0].n == 16);

    auto ii = construction_sizes(triple({E, E, O}, {q("0.04"), q("0.04"), q("0.05")}));
    REQUIRE(ii.size() == 2);
    CHECK(ii[0].n == 8);
    CHECK(ii[1].n == 6);

    auto iii = construction_sizes(triple({E, O, O}, {q("0.04"), q("0.05"), q("0.03")}));
    REQUIRE(iii.size() == 3);
    CHECK(iii[1].n == 4 + 10 - 4);
    CHECK(iii[2].n == 4 + 6 - 4);

    CHECK(construction_sizes(triple({E, E, E}, {1, 1, 1})).empty());
    CHECK_THROWS_AS(construction_sizes(triple({E, E, O}, {q("0.03"), 1, 1})), UndefinedTarget);
}
