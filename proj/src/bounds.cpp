#include <ramsey/bounds.hpp>
#include <ramsey/errors.hpp>

#include <algorithm>
#include <numeric>

namespace ramsey {

auto parity_name(CycleParity p) -> const char *
{
    return p == CycleParity::even ? "even" : "odd";
}

auto case_name(TheoremCase c) -> const char *
{
    switch (c) {
    case TheoremCase::all_even: return "eee";
    case TheoremCase::one_odd: return "eeo";
    case TheoremCase::two_odd: return "eoo";
    case TheoremCase::all_odd: return "ooo";
    }
    return "?";
}

auto floor_parity(const Rational & x, CycleParity p) -> long
{
    if (p == CycleParity::odd && x < 3)
        throw UndefinedTarget("odd target needs x >= 3, got " + to_string(x));
    if (p == CycleParity::even && x < 2)
        throw UndefinedTarget("even target needs x >= 2, got " + to_string(x));
    long f = static_cast<long>(floor_of(x));
    bool want_odd = p == CycleParity::odd;
    if ((f % 2 != 0) != want_odd)
        --f;
    return f;
}

auto validate(const TargetTriple & t) -> void
{
    if (t.n < 1)
        throw OutOfRange("scale n must be positive");
    for (int i = 0; i < 3; ++i) {
        if (t.alphas[i] <= 0)
            throw OutOfRange("alphas must be positive");
        long m = t.target_length(i);
        if (t.parities[i] == CycleParity::even && m < 4)
            throw UndefinedTarget("even target " + std::to_string(i + 1) + " shorter than 4");
    }
}

auto canonicalize(const TargetTriple & t) -> CanonicalTriple
{
    CanonicalTriple c;
    std::iota(c.permutation.begin(), c.permutation.end(), 0);
    std::stable_sort(c.permutation.begin(), c.permutation.end(), [&](int a, int b) {
        if (t.parities[a] != t.parities[b])
            return t.parities[a] == CycleParity::even;
        return t.alphas[a] > t.alphas[b];
    });
    c.triple.n = t.n;
    int odd = 0;
    for (int i = 0; i < 3; ++i) {
        c.triple.alphas[i] = t.alphas[c.permutation[i]];
        c.triple.parities[i] = t.parities[c.permutation[i]];
        odd += c.triple.parities[i] == CycleParity::odd;
    }
    c.theorem_case = static_cast<TheoremCase>(odd);
    return c;
}

auto theorem_coefficient(const TargetTriple & t) -> Coefficient
{
    validate(t);
    auto c = canonicalize(t);
    const auto & [a1, a2, a3] = c.triple.alphas;
    const Rational half(1, 2);
    Rational value;
    switch (c.theorem_case) {
    case TheoremCase::all_even: value = half * (a1 + a2 + a3) + half * std::max({a1, a2, a3}); break;
    case TheoremCase::one_odd: value = std::max({2 * a1 + a2, a1 + 2 * a2, half * a1 + half * a2 + a3}); break;
    case TheoremCase::two_odd: value = std::max({4 * a1, a1 + 2 * a2, a1 + 2 * a3}); break;
    case TheoremCase::all_odd: value = 4 * std::max({a1, a2, a3}); break;
    }
    return {value, c.theorem_case, c.permutation};
}

auto xi(const Rational & alpha, const Rational & beta, const Rational & nu) -> Rational
{
    const Rational half(1, 2);
    Rational first = half * alpha + half * beta + std::max({half * alpha, half * beta, nu});
    Rational second = 3 * half * alpha + std::max(half * alpha, nu);
    return std::max(first, second);
}

auto check_hole_params(const HoleParams & p) -> void
{
    if (p.alpha <= 0 || p.beta <= 0)
        throw OutOfRange("alpha and beta must be positive");
    if (p.nu < 0)
        throw OutOfRange("nu must be non-negative");
    if (std::max({p.alpha, p.beta, p.nu}) != 1)
        throw OutOfRange("max{alpha, beta, nu} must equal 1");
    if (p.epsilon <= 0 || p.epsilon * 100 >= std::min(p.alpha, p.beta))
        throw OutOfRange("epsilon must satisfy 0 < epsilon < 0.01 min{alpha, beta}");
}

auto lemma_dwa_host_size(const HoleParams & p, long n) -> long
{
    check_hole_params(p);
    const Rational half(1, 2);
    Rational c = half * p.alpha + half * p.beta + std::max({p.nu, half * p.alpha, half * p.beta})
        + 3 * sqrt_enclosure(p.epsilon).hi;
    return static_cast<long>(ceil_of(c * n));
}

auto lemma_trzy_host_size(const HoleParams & p, long n) -> long
{
    check_hole_params(p);
    Rational c = xi(p.alpha, p.beta, p.nu) + 5 * sqrt_enclosure(p.epsilon).hi;
    return static_cast<long>(ceil_of(c * n));
}

auto construction_sizes(const TargetTriple & t) -> std::vector<ConstructionSize>
{
    validate(t);
    auto c = canonicalize(t);
    long m1 = c.triple.target_length(0), m2 = c.triple.target_length(1), m3 = c.triple.target_length(2);
    switch (c.theorem_case) {
    case TheoremCase::all_even: return {};
    case TheoremCase::one_odd:
        return {{"eeo-four-part", 2 * m1 + m2 - 4}, {"eeo-three-part", m1 / 2 + m2 / 2 + m3 - 3}};
    case TheoremCase::two_odd:
        return {{"four-part-cliques", 4 * m1 - 4}, {"oee-four-part", m1 + 2 * m2 - 4}, {"oee-four-part-twin", m1 + 2 * m3 - 4}};
    case TheoremCase::all_odd: return {{"odd-triple", 4 * m1 - 4}};
    }
    return {};
}

} // namespace ramsey
