// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Independent checks live here; the library's own check_*
// helpers are deliberately not used to judge its outputs.

#include "oracles.hpp"

#include <ramsey/bounds.hpp>
#include <ramsey/cli.hpp>
#include <ramsey/constructions.hpp>
#include <ramsey/cycles.hpp>
#include <ramsey/errors.hpp>
#include <ramsey/lemma.hpp>
#include <ramsey/matching.hpp>
#include <ramsey/rng.hpp>
#include <ramsey/search.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace ramsey;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict
{
    bool pass = true;
    std::string detail;
};

auto fail(Verdict & v, const std::string & why) -> void
{
    if (v.pass)
        v.detail = why;
    v.pass = false;
}

auto workers() -> int
{
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// ------------------------------------------------------------------ 1

auto constructions() -> Verdict
{
    std::vector<ConstructionReport> reports;
    std::vector<int> odd = {3, 5, 7, 9}, even = {4, 6, 8};
    for (int m = 3; m <= 9; ++m)
        reports.push_back(build_four_part_cliques(m));
    for (int m : odd)
        reports.push_back(build_odd_triple(m));
    for (int m1 : even)
        for (int m2 : even)
            if (m1 >= m2)
                reports.push_back(build_eeo_four_part(m1, m2));
    for (int m1 : even)
        for (int m2 : even)
            for (int m3 : odd)
                reports.push_back(build_eeo_three_part(m1, m2, m3));
    for (int m1 : even)
        for (int m2 : odd)
            reports.push_back(build_oee_four_part(m1, m2));

    Verdict v;
    int informational_failures = 0;
    for (auto & r : reports) {
        r = verify_claims(std::move(r));
        if (! r.all_hold())
            fail(v, r.id + " with lengths " + std::to_string(r.lengths.front()) + "... has a failing claim");
        if (! r.coloring.is_complete() || ! r.coloring.holes().holes.empty() || ! r.coloring.deleted().empty())
            fail(v, r.id + " is not a complete colouring of K_N");
        for (std::size_t i = 0; i < r.claims.size(); ++i)
            if (r.claims[i].informational && r.verdicts[i].status != ClaimStatus::holds)
                ++informational_failures;
        // failing claims must carry a checkable witness
        for (std::size_t i = 0; i < r.claims.size(); ++i)
            if (r.verdicts[i].witness && ! verify_cycle(color_class(r.coloring, r.claims[i].color), *r.verdicts[i].witness))
                fail(v, r.id + " produced an invalid witness");
    }
    if (v.pass)
        v.detail = std::to_string(reports.size()) + " colourings, every required claim holds ("
            + std::to_string(informational_failures) + " informational claims refuted with witnesses)";
    return v;
}

// ------------------------------------------------------------------ 2

auto small_ramsey() -> Verdict
{
    Verdict v;
    std::ostringstream detail;
    for (int len : {3, 4}) {
        std::vector<Target> targets = {Target::cycle(len), Target::cycle(len)};
        for (int n : {5, 6}) {
            ArrowInstance inst;
            inst.n = n;
            inst.targets = targets;
            ExhaustiveOptions pruned, plain;
            plain.symmetry = false;
            auto a = arrow_exhaustive(inst, pruned);
            auto b = arrow_exhaustive(inst, plain);
            Arrows expected = n == 6 ? Arrows::yes : Arrows::no;
            if (a.arrows != expected || b.arrows != expected)
                fail(v, "R(C" + std::to_string(len) + ",C" + std::to_string(len) + ") wrong at N=" + std::to_string(n));
            if (expected == Arrows::no) {
                if (! a.witness || ! fits_instance(*a.witness, inst) || ! avoids_all_targets(*a.witness, targets))
                    fail(v, "missing or invalid witness at N=5");
            }
            detail << "C" << len << " N=" << n << ":" << arrows_name(a.arrows) << "(" << a.stats.nodes << "/"
                   << b.stats.nodes << " nodes) ";
        }
    }
    if (v.pass)
        v.detail = "R(C3,C3)=R(C4,C4)=6; " + detail.str();
    return v;
}

// ------------------------------------------------------------------ 3

auto oracle_equivalence() -> Verdict
{
    Verdict v;
    std::mt19937_64 rng(31337);
    int matching_mismatch = 0, cycle_mismatch = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        auto g = oracle::random_graph(n, 0.1 + 0.8 * ((rng() % 1000) / 1000.0), rng);
        auto m = maximum_matching(g);
        if (! verify_matching(g, m) || static_cast<int>(m.edges.size()) != oracle::matching_size(g))
            ++matching_mismatch;
    }
    for (int i = 0; i < 500; ++i) {
        int n = 3 + static_cast<int>(rng() % 8);
        auto g = oracle::random_graph(n, 0.15 + 0.7 * ((rng() % 1000) / 1000.0), rng);
        auto r = longest_cycle(g, Parity::any);
        int got = r.status == SearchStatus::found ? r.cycle->length() : 0;
        if (r.status == SearchStatus::budget_exceeded || got != oracle::longest_cycle(g, 0)
            || (r.cycle && ! verify_cycle(g, *r.cycle)))
            ++cycle_mismatch;
    }
    if (matching_mismatch || cycle_mismatch)
        fail(v, std::to_string(matching_mismatch) + " matching and " + std::to_string(cycle_mismatch)
                + " cycle mismatches");
    else
        v.detail = "500 matchings (n <= 12) and 500 longest cycles (n <= 10) agree with brute force";
    return v;
}

// ------------------------------------------------------------------ 4

/// a < sqrt(b) for a possibly negative a.
auto below_sqrt(long a, long b) -> bool
{
    return a < 0 || a * a < b;
}

auto tutte_suite() -> Verdict
{
    Verdict v;
    std::mt19937_64 rng(404);
    int checked = 0, violations = 0;
    while (checked < 1000) {
        int n = 2 + static_cast<int>(rng() % 40);
        auto g = oracle::random_graph(n, 0.02 + 0.3 * ((rng() % 1000) / 1000.0), rng);
        int sat = maximum_matching(g).saturation();
        int target = sat + 1 + static_cast<int>(rng() % 4);
        ++checked;
        auto p = tutte_partition(g, target);
        auto all = g.vertices();
        bool ok = ! p.s.intersects(p.t) && ! p.s.intersects(p.u) && ! p.t.intersects(p.u)
            && (p.s | p.t | p.u) == all;
        for (int t : p.t)
            ok = ok && ! g.neighbours(t).intersects(p.u);
        for (int t : p.t) {
            long deg = (g.neighbours(t) & p.t).count();
            ok = ok && (deg + 1) * (deg + 1) <= n;  // deg <= sqrt|V| - 1
        }
        ok = ok && below_sqrt(static_cast<long>(p.u.count()) + 2L * p.s.count() - target, n);
        violations += ! ok;
    }
    if (violations)
        fail(v, std::to_string(violations) + " of 1000 partitions break a conclusion");
    else
        v.detail = "1000 graphs without the target matching, all three conclusions hold";
    return v;
}

// ------------------------------------------------------------------ 5

auto erdos_gallai_suite() -> Verdict
{
    Verdict v;
    std::mt19937_64 rng(55);
    int checked = 0, violations = 0;
    while (checked < 300) {
        int n = 3 + static_cast<int>(rng() % 40);
        auto g = oracle::random_graph(n, 0.5 + 0.5 * ((rng() % 1000) / 1000.0), rng);
        int m = 3 + static_cast<int>(rng() % (n - 2));
        if (2 * g.edge_count() < static_cast<long>(m - 1) * (n - 1) + 2)
            continue;
        ++checked;
        auto c = erdos_gallai_cycle(g, m);
        violations += ! verify_cycle(g, c) || c.length() < m;
    }
    if (violations)
        fail(v, std::to_string(violations) + " of 300 extractions failed");
    else
        v.detail = "300 graphs over the edge threshold, every extracted cycle verified with length >= m";
    return v;
}

// ------------------------------------------------------------------ 6

auto split_suite() -> Verdict
{
    Verdict v;
    std::mt19937_64 rng(66);
    int checked = 0, violations = 0;
    while (checked < 300) {
        int n = 2 + static_cast<int>(rng() % 40);
        // sparse graphs with many small components, some bipartite
        auto g = oracle::random_graph(n, 0.02 + 0.12 * ((rng() % 1000) / 1000.0), rng);
        int scale = 1 + static_cast<int>(rng() % 30);
        Rational alpha(1 + static_cast<long>(rng() % 20), 10);
        if (Rational(best_component_saturation(g, true)) >= alpha * scale)
            continue;
        ++checked;
        auto s = bipartite_split(g, alpha, scale);
        bool ok = ! s.bipartite_part.intersects(s.rest) && (s.bipartite_part | s.rest) == g.vertices();
        for (int x : s.bipartite_part)
            ok = ok && ! g.neighbours(x).intersects(s.rest);
        ok = ok && is_bipartite(g, s.bipartite_part);
        for (const auto & comp : components(g)) {
            if (comp.is_subset_of(s.rest))
                ok = ok && ! is_bipartite(g, comp);
            else
                ok = ok && comp.is_subset_of(s.bipartite_part) && is_bipartite(g, comp);
        }
        ok = ok && Rational(g.edges_within(s.rest)) <= alpha * scale * s.rest.count() / 2;
        violations += ! ok;
    }
    if (violations)
        fail(v, std::to_string(violations) + " of 300 splits break a conclusion");
    else
        v.detail = "300 graphs meeting the hypothesis, all split conclusions hold";
    return v;
}

// ------------------------------------------------------------------ 7

auto lemma_suite() -> Verdict
{
    Verdict v;
    std::ostringstream detail;
    std::vector<LemmaParams> runs;
    LemmaParams l2;
    l2.id = LemmaId::l2, l2.n = 40, l2.n2 = 40, l2.epsilon = Rational(1, 200);
    runs.push_back(l2);
    LemmaParams dbl;
    dbl.id = LemmaId::double_hole, dbl.n = 60, dbl.nu = Rational(3, 10), dbl.nu2 = Rational(3, 10);
    dbl.epsilon = Rational(1, 50);
    runs.push_back(dbl);
    for (auto id : {LemmaId::dwa, LemmaId::trzy})
        for (Rational nu : {Rational(0), Rational(1, 2), Rational(1)}) {
            LemmaParams p;
            p.id = id, p.n = 40, p.nu = nu, p.alpha = 1, p.beta = 1, p.epsilon = parse_rational("0.0081");
            runs.push_back(p);
        }
    for (const auto & p : runs) {
        auto r = lemma_harness(p, 200, default_seed, workers(), 200);
        std::string tag = std::string(lemma_name(p.id))
            + (p.id == LemmaId::dwa || p.id == LemmaId::trzy ? "(nu=" + to_string(p.nu) + ")" : "");
        detail << (detail.tellp() > 0 ? "; " : "") << tag << ":" << r.passes << "/" << r.samples << " margin "
               << r.min_slack;
        if (r.failures > 0)
            fail(v, tag + " has " + std::to_string(r.failures) + " conclusion failures with valid hypotheses");
        if (r.uniform_samples == 0 || r.adversarial_samples == 0)
            fail(v, tag + " did not use both sampling modes");
    }
    if (v.pass)
        v.detail = "zero failures; " + detail.str();
    return v;
}

// ------------------------------------------------------------------ 8

auto walk_ok(const Graph & g, const ClosedWalk & w, const MatchingCertificate & m, bool odd, const VertexSet & comp)
    -> bool
{
    int len = w.length();
    if (len < 2 || (len % 2 == 1) != odd)
        return false;
    std::set<Edge> traversed;
    for (int i = 0; i < len; ++i) {
        int a = w.vertices[i], b = w.vertices[(i + 1) % len];
        if (! comp.test(a) || ! g.adjacent(a, b))
            return false;
        traversed.insert(Edge(a, b));
    }
    return std::all_of(m.edges.begin(), m.edges.end(), [&](Edge e) { return traversed.count(e) > 0; });
}

auto walk_suite() -> Verdict
{
    Verdict v;
    std::mt19937_64 rng(88);
    int checked = 0, violations = 0;
    while (checked < 300) {
        int n = 2 + static_cast<int>(rng() % 30);
        auto g = oracle::random_graph(n, 0.05 + 0.3 * ((rng() % 1000) / 1000.0), rng);
        auto comps = components(g);
        const auto & comp = comps[rng() % comps.size()];
        if (comp.count() < 2)
            continue;
        auto full = maximum_matching(g.induced(comp));
        MatchingCertificate m;
        for (auto e : full.edges)
            if (rng() % 3 != 0)
                m.edges.push_back(e);
        if (m.edges.empty())
            m.edges.push_back(full.edges.front());
        bool odd = rng() % 2 == 0;
        if (odd && is_bipartite(g, comp))
            continue;
        ++checked;
        auto w = closed_walk_through_matching(g, m, odd ? WalkParity::odd : WalkParity::even);
        violations += ! walk_ok(g, w, m, odd, comp);
    }
    if (violations)
        fail(v, std::to_string(violations) + " of 300 walks failed the predicate");
    else
        v.detail = "300 instances, every walk closed, of the right parity, inside the component and through the matching";
    return v;
}

// ------------------------------------------------------------------ 9

auto triple(const char * parities, Rational a, Rational b, Rational c) -> TargetTriple
{
    TargetTriple t;
    t.alphas = {a, b, c};
    for (int i = 0; i < 3; ++i)
        t.parities[i] = parities[i] == 'e' ? CycleParity::even : CycleParity::odd;
    t.n = 1000;
    return t;
}

auto formula_suite() -> Verdict
{
    Verdict v;
    auto expect = [&](const Rational & got, const Rational & want, const std::string & what) {
        if (got != want)
            fail(v, what + " = " + to_string(got) + ", expected " + to_string(want));
    };
    expect(theorem_coefficient(triple("ooo", 1, 1, 1)).value, 4, "coefficient ooo(1,1,1)");
    expect(theorem_coefficient(triple("eeo", 1, 1, 1)).value, 3, "coefficient eeo(1,1,1)");
    expect(theorem_coefficient(triple("eoo", 1, 2, 2)).value, 5, "coefficient eoo(1,2,2)");
    expect(xi(1, 1, 0), 2, "xi(1,1,0)");
    expect(xi(1, 1, 1), Rational(5, 2), "xi(1,1,1)");
    expect(xi(2, 1, 0), 4, "xi(2,1,0)");
    auto eps = parse_rational("0.0001");
    expect(lemma_dwa_host_size({1, 1, 0, eps}, 100), 153, "dwa host (1,1,0)");
    expect(lemma_dwa_host_size({1, 1, 1, eps}, 100), 203, "dwa host (1,1,1)");
    expect(lemma_dwa_host_size({1, Rational(1, 2), 1, eps}, 100), 178, "dwa host (1,1/2,1)");

    std::mt19937_64 rng(9);
    auto random_rational = [&] { return Rational(1 + static_cast<long>(rng() % 97), 1 + static_cast<long>(rng() % 31)); };
    const char * names[] = {"eee", "eeo", "eoo", "ooo"};
    int broken = 0;
    for (int i = 0; i < 10000; ++i) {
        Rational a = random_rational(), b = random_rational(), c = random_rational();
        const char * p = names[i % 4];
        auto base = theorem_coefficient(triple(p, a, b, c)).value;
        if (base < std::max({a, b, c}))
            ++broken;
        if (i % 4 == 1 && theorem_coefficient(triple(p, b, a, c)).value != base)
            ++broken;
        if (i % 4 == 2 && theorem_coefficient(triple(p, a, c, b)).value != base)
            ++broken;
        if (i % 4 == 3) {
            std::array<Rational, 3> x = {a, b, c};
            std::sort(x.begin(), x.end());
            do
                broken += theorem_coefficient(triple(p, x[0], x[1], x[2])).value != base;
            while (std::next_permutation(x.begin(), x.end()));
        }
        // the all-even formula is symmetric in all three as well
        if (i % 4 == 0 && theorem_coefficient(triple(p, c, a, b)).value != base)
            ++broken;
        Rational nu = random_rational() / 10;
        Rational half(1, 2);
        if (xi(a, b, nu) < half * a + half * b + std::max({half * a, half * b, nu}))
            ++broken;
    }
    if (broken)
        fail(v, std::to_string(broken) + " symmetry or inequality violations on random triples");
    if (v.pass)
        v.detail = "9 example values exact; symmetries and inequalities hold on 10000 random triples";
    return v;
}

// ----------------------------------------------------------------- 10

auto determinism_suite() -> Verdict
{
    Verdict v;
    std::vector<std::vector<std::string>> commands = {
        {"search", "--targets", "C3,C3", "--n", "5"},
        {"search", "--targets", "C4,C4", "--n", "6"},
        {"search", "--targets", "C3,C5", "--n", "8", "--split-depth", "8"},
        {"search", "--targets", "M4,M4n", "--n", "5"},
        {"search", "--targets", "C5,C5", "--n", "8", "--method", "randomized", "--steps", "20000"},
        {"search", "--targets", "C5,C5,C5", "--n", "16", "--method", "randomized", "--steps", "4000", "--restarts", "4"},
        {"lemma", "--id", "l2", "--n", "20", "--n2", "16", "--epsilon", "0.008", "--samples", "20"},
        {"lemma", "--id", "double", "--n", "30", "--nu", "0.3", "--nu2", "0.6", "--epsilon", "0.02", "--samples",
            "20"},
        {"lemma", "--id", "dwa", "--n", "16", "--nu", "0.5", "--samples", "20"},
        {"lemma", "--id", "trzy", "--n", "16", "--nu", "1", "--samples", "20"},
        {"lemma", "--id", "f1", "--n", "12", "--alpha", "1", "--beta", "0.5", "--epsilon", "0.001", "--samples",
            "20"},
    };
    int compared = 0;
    for (const auto & cmd : commands) {
        std::vector<std::string> outputs;
        for (const char * threads : {"1", "1", "8", "8"}) {
            std::vector<std::string> args = {"--format", "json", "--threads", threads};
            args.insert(args.end(), cmd.begin(), cmd.end());
            std::ostringstream out, err;
            run_cli(args, out, err);
            outputs.push_back(out.str());
        }
        ++compared;
        if (! std::all_of(outputs.begin(), outputs.end(), [&](const std::string & s) { return s == outputs[0]; }))
            fail(v, "reports differ for '" + cmd[0] + " " + cmd[1] + " " + cmd[2] + "'");
        if (outputs[0].empty())
            fail(v, "empty report for '" + cmd[0] + " " + cmd[2] + "'");
    }
    if (v.pass)
        v.detail = std::to_string(compared) + " seeded commands, byte-identical JSON reports over 2 runs x {1, 8} workers";
    return v;
}

} // namespace

int main()
{
    struct Criterion
    {
        const char * name;
        std::function<Verdict()> check;
        double limit_seconds;
    };
    std::vector<Criterion> criteria = {
        {"construction verification", constructions, 60},
        {"exact small Ramsey numbers", small_ramsey, 300},
        {"oracle equivalence", oracle_equivalence, 0},
        {"Tutte partition suite", tutte_suite, 0},
        {"Erdos-Gallai suite", erdos_gallai_suite, 0},
        {"bipartite split suite", split_suite, 0},
        {"matching lemma harness", lemma_suite, 900},
        {"closed walk construction", walk_suite, 0},
        {"formula calculator", formula_suite, 0},
        {"determinism", determinism_suite, 0},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = Clock::now();
        Verdict v;
        try {
            v = criteria[i].check();
        }
        catch (const std::exception & e) {
            fail(v, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (criteria[i].limit_seconds > 0 && seconds > criteria[i].limit_seconds)
            fail(v, "took " + std::to_string(seconds) + " s, over the limit");
        failed += ! v.pass;
        std::ostringstream line;
        line << (v.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].name << ": " << v.detail << " ("
             << std::fixed;
        line.precision(1);
        line << seconds << " s)";
        std::cout << line.str() << std::endl;
    }
    return failed ? 1 : 0;
}
