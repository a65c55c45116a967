#ifndef RAMSEY_BOUNDS_HPP
#define RAMSEY_BOUNDS_HPP

#include <ramsey/rational.hpp>

#include <array>
#include <string>
#include <vector>

namespace ramsey {

enum class CycleParity
{
    even,
    odd
};

auto parity_name(CycleParity p) -> const char *;

/// Largest integer of parity `p` not exceeding x. Throws UndefinedTarget
/// when x < 3 (odd) or x < 2 (even).
auto floor_parity(const Rational & x, CycleParity p) -> long;

/// Three cycle targets C_{floor_p(alpha_i n)}.
struct TargetTriple
{
    std::array<Rational, 3> alphas;
    std::array<CycleParity, 3> parities;
    long n = 1;

    auto target_length(int i) const -> long { return floor_parity(alphas[i] * n, parities[i]); }
};

/// Throws OutOfRange/UndefinedTarget unless all alphas are positive, n >= 1,
/// odd targets are >= 3 and even targets are >= 4.
auto validate(const TargetTriple & t) -> void;

enum class TheoremCase
{
    all_even,     // (even, even, even)
    one_odd,      // (even, even, odd)
    two_odd,      // (even, odd, odd)
    all_odd       // (odd, odd, odd)
};

auto case_name(TheoremCase c) -> const char *;

/// Evens before odds, larger alpha first within a parity class (stable).
/// `permutation[i]` is the original index placed at canonical position i.
struct CanonicalTriple
{
    TargetTriple triple;
    std::array<int, 3> permutation;
    TheoremCase theorem_case;
};

auto canonicalize(const TargetTriple & t) -> CanonicalTriple;

struct Coefficient
{
    Rational value;
    TheoremCase theorem_case;
    std::array<int, 3> permutation;
};

/// Leading coefficient c with R(C_{m1}, C_{m2}, C_{m3}) = (c + o(1)) n.
auto theorem_coefficient(const TargetTriple & t) -> Coefficient;

/// max{a/2 + b/2 + max{a/2, b/2, nu}, 3a/2 + max{a/2, nu}}
auto xi(const Rational & alpha, const Rational & beta, const Rational & nu) -> Rational;

struct HoleParams
{
    Rational alpha, beta, nu, epsilon;
};

/// alpha, beta > 0, nu >= 0, max{alpha, beta, nu} == 1, 0 < epsilon < min{alpha, beta} / 100.
auto check_hole_params(const HoleParams & p) -> void;

/// ceil((a/2 + b/2 + max{nu, a/2, b/2} + 3 sqrt(eps)) n), sqrt rounded outward.
auto lemma_dwa_host_size(const HoleParams & p, long n) -> long;

/// ceil((xi(a, b, nu) + 5 sqrt(eps)) n), sqrt rounded outward.
auto lemma_trzy_host_size(const HoleParams & p, long n) -> long;

struct ConstructionSize
{
    std::string id;
    long n = 0;
};

/// Vertex counts of the lower-bound colourings for the triple's case, in
/// canonical order. Empty for the all-even case.
auto construction_sizes(const TargetTriple & t) -> std::vector<ConstructionSize>;

} // namespace ramsey

#endif
