#include <ramsey/errors.hpp>
#include <ramsey/matching.hpp>
#include <ramsey/parallel.hpp>
#include <ramsey/rng.hpp>
#include <ramsey/search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <numeric>

namespace ramsey {

auto target_name(const Target & t) -> std::string
{
    if (t.kind == TargetKind::cycle)
        return "C" + std::to_string(t.length);
    return "M" + std::to_string(t.saturation) + (t.nonbipartite ? "n" : "");
}

auto parse_target(const std::string & text) -> Target
{
    auto number = [&](const std::string & digits) {
        if (digits.empty() || digits.size() > 6 || ! std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw ParseError("bad target '" + text + "'");
        return std::stoi(digits);
    };
    if (text.size() >= 2 && text[0] == 'C')
        return Target::cycle(number(text.substr(1)));
    if (text.size() >= 2 && text[0] == 'M') {
        bool nonbip = text.back() == 'n';
        return Target::matching(number(text.substr(1, text.size() - 1 - (nonbip ? 1 : 0))), nonbip);
    }
    throw ParseError("bad target '" + text + "' (expected C<len> or M<sat>[n])");
}

auto matching_from_cycle(const Target & t) -> Target
{
    if (t.kind != TargetKind::cycle)
        return t;
    return Target::matching(2 * (t.length / 2), t.length % 2 == 1);
}

auto validate(const ArrowInstance & inst) -> void
{
    if (inst.n < 1 || inst.n > max_vertices)
        throw OutOfRange("host size outside 1..512");
    if (inst.targets.size() < 2 || inst.targets.size() > 3)
        throw OutOfRange("an instance needs 2 or 3 targets");
    for (const auto & t : inst.targets) {
        if (t.kind == TargetKind::cycle && t.length < 3)
            throw OutOfRange("cycle targets need length >= 3");
        if (t.kind == TargetKind::matching && (t.saturation < 2 || t.saturation % 2 != 0))
            throw OutOfRange("matching targets need an even saturation >= 2");
    }
    if (inst.deleted_budget < 0)
        throw OutOfRange("deletion budget must be non-negative");
    for (const auto & h : inst.holes.holes)
        if (! h.is_subset_of(VertexSet::range(inst.n)))
            throw OutOfRange("hole member outside vertex range");
    for (const auto & e : inst.deleted)
        if (e.u == e.v || e.v >= inst.n || e.u < 0)
            throw OutOfRange("deleted pair outside vertex range");
}

auto arrows_name(Arrows a) -> const char *
{
    switch (a) {
    case Arrows::yes: return "true";
    case Arrows::no: return "false";
    case Arrows::unknown: return "unknown";
    }
    return "?";
}

auto contains_target(const EdgeColoring & c, int color, const Target & t, CycleBudget budget) -> SearchStatus
{
    Graph cls = color_class(c, color);
    if (t.kind == TargetKind::cycle)
        return has_cycle_of_length(cls, t.length, budget).status;
    return best_component_saturation(cls, t.nonbipartite) >= t.saturation ? SearchStatus::found : SearchStatus::absent;
}

auto avoids_all_targets(const EdgeColoring & c, const std::vector<Target> & targets) -> bool
{
    for (std::size_t i = 0; i < targets.size(); ++i) {
        auto s = contains_target(c, static_cast<int>(i) + 1, targets[i]);
        if (s == SearchStatus::budget_exceeded)
            throw BudgetExceeded("target re-check ran out of budget");
        if (s == SearchStatus::found)
            return false;
    }
    return true;
}

auto fits_instance(const EdgeColoring & c, const ArrowInstance & inst) -> bool
{
    if (c.size() != inst.n || c.colors() != static_cast<int>(inst.targets.size()) || ! (c.holes() == inst.holes))
        return false;
    try {
        c.validate();
    }
    catch (const InvalidColoring &) {
        return false;
    }
    const auto & gone = c.deleted();
    for (auto e : inst.deleted)
        if (! inst.holes.contains_pair(e.u, e.v) && ! std::binary_search(gone.begin(), gone.end(), e))
            return false;
    auto fixed = inst.deleted;
    std::sort(fixed.begin(), fixed.end());
    int extra = 0;
    for (auto e : gone)
        if (! inst.holes.contains_pair(e.u, e.v) && ! std::binary_search(fixed.begin(), fixed.end(), e))
            ++extra;
    return extra <= inst.deleted_budget;
}

namespace {

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Host edges in search order, with lookup from vertex pair to position.
struct Host
{
    int n = 0;
    std::vector<Edge> order;
    std::vector<int> index;   // n*n, -1 for non-host pairs

    auto position(int a, int b) const -> int { return index[a * n + b]; }
};

auto build_host(const ArrowInstance & inst) -> Host
{
    Host h;
    h.n = inst.n;
    h.index.assign(inst.n * inst.n, -1);
    auto fixed = inst.deleted;
    std::sort(fixed.begin(), fixed.end());
    for (int b = 1; b < inst.n; ++b)
        for (int a = 0; a < b; ++a) {
            if (inst.holes.contains_pair(a, b) || std::binary_search(fixed.begin(), fixed.end(), Edge(a, b)))
                continue;
            h.index[a * inst.n + b] = h.index[b * inst.n + a] = static_cast<int>(h.order.size());
            h.order.emplace_back(a, b);
        }
    return h;
}

/**
 * Symmetries used to prune: permutations of the first p vertices that keep
 * each vertex's hole memberships (vertices touching a fixed deletion stay
 * put), combined with permutations of colours whose targets coincide. A
 * partial colouring survives only if, once the clique on its first p
 * vertices is complete, no symmetry maps that clique to a lexicographically
 * smaller sequence. The lexicographically least member of every orbit
 * passes all these tests, so no witness is lost.
 */
struct Symmetry
{
    struct Check
    {
        int length = 0;                       // prefix positions compared
        std::vector<std::vector<int>> sources; // per vertex perm: image pos -> source pos
    };
    std::vector<std::vector<Check>> at;  // per position
    std::vector<std::vector<std::uint8_t>> colour_maps;
};

auto build_symmetry(const ArrowInstance & inst, const Host & host, const ExhaustiveOptions & options) -> Symmetry
{
    const int k = static_cast<int>(inst.targets.size());
    Symmetry sym;
    sym.at.resize(host.order.size());

    std::vector<int> colours(k);
    std::iota(colours.begin(), colours.end(), 0);
    do {
        bool ok = true;
        for (int c = 0; c < k; ++c)
            ok = ok && inst.targets[colours[c]] == inst.targets[c];
        if (ok) {
            std::vector<std::uint8_t> map(k + 1, 0);
            for (int c = 0; c < k; ++c)
                map[c + 1] = static_cast<std::uint8_t>(colours[c] + 1);
            sym.colour_maps.push_back(map);
        }
    } while (options.symmetry && std::next_permutation(colours.begin(), colours.end()));

    if (! options.symmetry || host.order.empty())
        return sym;

    std::vector<long> signature(inst.n, 0);
    for (int v = 0; v < inst.n; ++v)
        for (std::size_t i = 0; i < inst.holes.holes.size(); ++i)
            if (inst.holes.holes[i].test(v))
                signature[v] |= 1L << i;
    for (auto e : inst.deleted) {
        signature[e.u] = -1 - e.u;
        signature[e.v] = -1 - e.v;
    }

    const int cap = std::min(options.symmetry_prefix, inst.n);
    for (int p = 2; p <= cap; ++p) {
        int last = -1;
        for (std::size_t i = 0; i < host.order.size() && host.order[i].v < p; ++i)
            last = static_cast<int>(i);
        if (last < 0)
            continue;
        Symmetry::Check check;
        check.length = last + 1;
        std::vector<int> perm(p);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int v = 0; v < p && ok; ++v)
                ok = signature[perm[v]] == signature[v];
            if (! ok)
                continue;
            // image position of (a,b) is (perm a, perm b); record its source
            std::vector<int> source(check.length);
            for (int j = 0; j < check.length; ++j) {
                auto e = host.order[j];
                source[host.position(perm[e.u], perm[e.v])] = j;
            }
            check.sources.push_back(std::move(source));
        } while (std::next_permutation(perm.begin(), perm.end()));
        sym.at[last].push_back(std::move(check));
    }
    return sym;
}

enum class Outcome
{
    exhausted,
    found,
    out_of_budget
};

class Engine
{
public:
    Engine(const ArrowInstance & inst, const Host & host, const Symmetry & sym, std::uint64_t cap) :
        _inst(inst), _host(host), _sym(sym), _k(static_cast<int>(inst.targets.size())), _cap(cap),
        _value(host.order.size(), 0)
    {
        for (int c = 0; c <= _k; ++c)
            _cls.emplace_back(inst.n);
    }

    auto load(const std::vector<std::uint8_t> & prefix) -> void
    {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            _value[i] = prefix[i];
            if (prefix[i] == 0)
                ++_deleted_used;
            else
                _cls[prefix[i]].add_edge(_host.order[i].u, _host.order[i].v);
        }
    }

    /// Depth-first search from position i. With a frontier, stops at
    /// `stop` and records each surviving prefix instead of descending.
    auto dfs(int i, int stop, std::vector<std::vector<std::uint8_t>> * frontier) -> Outcome
    {
        const int total = static_cast<int>(_host.order.size());
        if (frontier && i == stop) {
            frontier->emplace_back(_value.begin(), _value.begin() + i);
            return Outcome::exhausted;
        }
        if (i == total)
            return Outcome::found;

        const auto e = _host.order[i];
        for (int c = 1; c <= _k + 1; ++c) {
            int value = c <= _k ? c : 0;
            if (value == 0 && _deleted_used >= _inst.deleted_budget)
                break;
            if (++nodes > _cap)
                return Outcome::out_of_budget;

            _value[i] = static_cast<std::uint8_t>(value);
            if (value == 0)
                ++_deleted_used;
            else
                _cls[value].add_edge(e.u, e.v);

            bool pruned = (value != 0 && hits_target(value, e)) || ! canonical(i);
            Outcome r = Outcome::exhausted;
            if (pruned)
                ++prunes;
            else
                r = dfs(i + 1, stop, frontier);

            if (value == 0)
                --_deleted_used;
            else if (r != Outcome::found)
                _cls[value].remove_edge(e.u, e.v);
            if (r != Outcome::exhausted)
                return r;
        }
        return Outcome::exhausted;
    }

    auto witness() const -> EdgeColoring
    {
        auto deleted = _inst.deleted;
        for (std::size_t i = 0; i < _value.size(); ++i)
            if (_value[i] == 0)
                deleted.push_back(_host.order[i]);
        EdgeColoring c(_inst.n, _k, _inst.holes, deleted);
        for (std::size_t i = 0; i < _value.size(); ++i)
            if (_value[i] != 0)
                c.set_color(_host.order[i].u, _host.order[i].v, _value[i]);
        return c;
    }

    std::uint64_t nodes = 0, prunes = 0;

private:
    auto hits_target(int c, Edge e) const -> bool
    {
        const auto & t = _inst.targets[c - 1];
        const Graph & g = _cls[c];
        if (t.kind == TargetKind::cycle)
            return has_path_of_length(g, e.u, e.v, t.length - 1);
        VertexSet comp = component_of(g, e.u);
        if (comp.count() < t.saturation)
            return false;
        if (t.nonbipartite && is_bipartite(g, comp))
            return false;
        return maximum_matching(g.induced(comp)).saturation() >= t.saturation;
    }

    auto canonical(int i) const -> bool
    {
        for (const auto & check : _sym.at[i])
            for (const auto & source : check.sources)
                for (const auto & map : _sym.colour_maps) {
                    for (int pos = 0; pos < check.length; ++pos) {
                        int image = map[_value[source[pos]]], mine = _value[pos];
                        if (image < mine)
                            return false;
                        if (image > mine)
                            break;
                    }
                }
        return true;
    }

    const ArrowInstance & _inst;
    const Host & _host;
    const Symmetry & _sym;
    int _k;
    std::uint64_t _cap;
    std::vector<std::uint8_t> _value;
    std::vector<Graph> _cls;
    int _deleted_used = 0;
};

struct Subtree
{
    Outcome outcome = Outcome::exhausted;
    std::uint64_t nodes = 0, prunes = 0;
    std::optional<EdgeColoring> witness;
    bool ran = false;
};

auto checked_witness(const ArrowInstance & inst, EdgeColoring w) -> EdgeColoring
{
    if (! fits_instance(w, inst) || ! avoids_all_targets(w, inst.targets))
        throw Error("internal error: search witness failed its independent re-check");
    return w;
}

} // namespace

auto arrow_exhaustive(const ArrowInstance & inst, const ExhaustiveOptions & options) -> ArrowVerdict
{
    validate(inst);
    const auto start = Clock::now();
    ArrowVerdict verdict;
    if (inst.n > options.exact_cap) {
        verdict.note = "host size " + std::to_string(inst.n) + " above the exact cap " + std::to_string(options.exact_cap);
        return verdict;
    }

    const Host host = build_host(inst);
    const Symmetry sym = build_symmetry(inst, host, options);
    const int depth = std::min<int>(options.split_depth, static_cast<int>(host.order.size()));

    std::vector<std::vector<std::uint8_t>> frontier;
    Engine top(inst, host, sym, options.node_budget);
    Outcome head = top.dfs(0, depth, &frontier);
    verdict.stats.nodes = top.nodes;
    verdict.stats.prunes = top.prunes;
    if (head == Outcome::out_of_budget) {
        verdict.note = "node budget exhausted";
        verdict.stats.seconds = seconds_since(start);
        return verdict;
    }

    std::vector<Subtree> results(frontier.size());
    std::atomic<int> first_found{INT_MAX};
    parallel_indices(static_cast<int>(frontier.size()), options.threads, [&](int j) {
        if (j > first_found.load())
            return;
        Engine e(inst, host, sym, options.node_budget);
        e.load(frontier[j]);
        auto & r = results[j];
        r.outcome = e.dfs(depth, -1, nullptr);
        r.nodes = e.nodes;
        r.prunes = e.prunes;
        r.ran = true;
        if (r.outcome == Outcome::found) {
            r.witness = e.witness();
            int seen = first_found.load();
            while (j < seen && ! first_found.compare_exchange_weak(seen, j)) {
            }
        }
    });

    verdict.arrows = Arrows::yes;
    for (auto & r : results) {
        if (! r.ran)
            throw Error("internal error: subtree skipped before the first witness");
        verdict.stats.nodes += r.nodes;
        verdict.stats.prunes += r.prunes;
        if (r.outcome == Outcome::out_of_budget || verdict.stats.nodes > options.node_budget) {
            verdict.arrows = Arrows::unknown;
            verdict.note = "node budget exhausted";
            break;
        }
        if (r.outcome == Outcome::found) {
            verdict.arrows = Arrows::no;
            verdict.witness = checked_witness(inst, std::move(*r.witness));
            break;
        }
    }
    verdict.stats.seconds = seconds_since(start);
    return verdict;
}

auto tau_check(const ArrowInstance & inst, const ExhaustiveOptions & options) -> ArrowVerdict
{
    for (const auto & t : inst.targets)
        if (t.kind != TargetKind::matching)
            throw PreconditionViolated("tau_check takes matching demands only");
    return arrow_exhaustive(inst, options);
}

auto ramsey_number_exact(const std::vector<Target> & targets, int from, int to, const ExhaustiveOptions & options)
    -> RamseyNumberResult
{
    if (from < 1 || to < from)
        throw OutOfRange("empty host-size range");
    RamseyNumberResult result;
    std::optional<int> last_no, first_yes;
    for (int n = from; n <= to; ++n) {
        ArrowInstance inst;
        inst.n = n;
        inst.targets = targets;
        auto v = arrow_exhaustive(inst, options);
        if (v.arrows == Arrows::no) {
            if (first_yes)
                throw Error("monotonicity broken: host " + std::to_string(n) + " fails to arrow after host "
                    + std::to_string(*first_yes) + " did");
            last_no = n;
        }
        if (v.arrows == Arrows::yes && ! first_yes)
            first_yes = n;
        result.verdicts.emplace_back(n, std::move(v));
    }
    result.lower = last_no ? *last_no + 1 : 1;
    result.upper = first_yes;
    if (first_yes && last_no && *last_no == *first_yes - 1)
        result.value = first_yes;
    return result;
}

namespace {

/// Annealing state for one restart: colours of host edges plus, per colour,
/// how badly the colour class violates its target.
class Annealer
{
public:
    Annealer(const ArrowInstance & inst, const Host & host) :
        _inst(inst), _host(host), _k(static_cast<int>(inst.targets.size())), _colour(host.order.size(), 1),
        _bad(host.order.size(), 0), _violation(_k + 1, 0)
    {
        for (int c = 0; c <= _k; ++c)
            _cls.emplace_back(inst.n);
    }

    auto start(Rng & rng, const std::optional<EdgeColoring> & initial) -> void
    {
        for (auto & g : _cls)
            g = Graph(_inst.n);
        for (std::size_t i = 0; i < _host.order.size(); ++i) {
            auto e = _host.order[i];
            int c = initial ? initial->color(e.u, e.v) : 0;
            if (c < 1 || c > _k)
                c = 1 + static_cast<int>(rng.below(_k));
            _colour[i] = static_cast<std::uint8_t>(c);
            _cls[c].add_edge(e.u, e.v);
        }
        for (int c = 1; c <= _k; ++c)
            rescore(c);
    }

    auto total() const -> long { return std::accumulate(_violation.begin(), _violation.end(), 0L); }

    /// One proposal at temperature t.
    auto step(Rng & rng, double t, double focus) -> void
    {
        const int edges = static_cast<int>(_host.order.size());
        int i = -1;
        if (rng.chance(focus)) {
            _pool.clear();
            for (int j = 0; j < edges; ++j)
                if (_bad[j] || (_inst.targets[_colour[j] - 1].kind == TargetKind::matching && _violation[_colour[j]] > 0))
                    _pool.push_back(j);
            if (! _pool.empty())
                i = _pool[rng.below(_pool.size())];
        }
        if (i < 0)
            i = static_cast<int>(rng.below(edges));

        const int from = _colour[i];
        int to = 1 + static_cast<int>(rng.below(_k - 1));
        if (to >= from)
            ++to;

        const long before = total();
        auto saved_bad = _bad;
        auto saved_violation = _violation;
        recolour(i, from, to);
        const long delta = total() - before;
        if (delta <= 0 || rng.unit() < std::exp(-static_cast<double>(delta) / t))
            return;
        recolour(i, to, from, false);
        _bad = std::move(saved_bad);
        _violation = std::move(saved_violation);
    }

    auto coloring() const -> EdgeColoring
    {
        EdgeColoring c(_inst.n, _k, _inst.holes, _inst.deleted);
        for (std::size_t i = 0; i < _host.order.size(); ++i)
            c.set_color(_host.order[i].u, _host.order[i].v, _colour[i]);
        return c;
    }

private:
    auto recolour(int i, int from, int to, bool score = true) -> void
    {
        auto e = _host.order[i];
        const bool was_bad = _bad[i];
        _cls[from].remove_edge(e.u, e.v);
        _cls[to].add_edge(e.u, e.v);
        _colour[i] = static_cast<std::uint8_t>(to);
        _bad[i] = 0;
        if (score) {
            removed(from, was_bad);
            added(to, i);
        }
    }

    // A target cycle that disappears must have used the removed edge, so
    // nothing changes unless that edge was on one.
    auto removed(int c, bool was_bad) -> void
    {
        const auto & t = _inst.targets[c - 1];
        if (t.kind != TargetKind::cycle) {
            rescore(c);
            return;
        }
        if (! was_bad)
            return;
        long count = 0;
        for (std::size_t j = 0; j < _host.order.size(); ++j)
            if (_colour[j] == c && _bad[j]) {
                auto f = _host.order[j];
                _bad[j] = has_path_of_length(_cls[c], f.u, f.v, t.length - 1);
                count += _bad[j];
            }
        _violation[c] = count;
    }

    // A new target cycle must use the added edge; only edges that were
    // clean can turn bad, and only if the added edge closes a cycle.
    auto added(int c, int i) -> void
    {
        const auto & t = _inst.targets[c - 1];
        if (t.kind != TargetKind::cycle) {
            rescore(c);
            return;
        }
        auto e = _host.order[i];
        if (! has_path_of_length(_cls[c], e.u, e.v, t.length - 1))
            return;
        _bad[i] = 1;
        ++_violation[c];
        for (std::size_t j = 0; j < _host.order.size(); ++j)
            if (_colour[j] == c && ! _bad[j]) {
                auto f = _host.order[j];
                if (has_path_of_length(_cls[c], f.u, f.v, t.length - 1)) {
                    _bad[j] = 1;
                    ++_violation[c];
                }
            }
    }

    /// Cycle targets count the colour-c edges lying on a copy of the cycle;
    /// matching targets count how far the best component overshoots.
    auto rescore(int c) -> void
    {
        const auto & t = _inst.targets[c - 1];
        const Graph & g = _cls[c];
        if (t.kind == TargetKind::cycle) {
            long count = 0;
            for (std::size_t i = 0; i < _host.order.size(); ++i)
                if (_colour[i] == c) {
                    auto e = _host.order[i];
                    _bad[i] = has_path_of_length(g, e.u, e.v, t.length - 1);
                    count += _bad[i];
                }
            _violation[c] = count;
        }
        else {
            int sat = best_component_saturation(g, t.nonbipartite);
            _violation[c] = sat >= t.saturation ? (sat - t.saturation) / 2 + 1 : 0;
        }
    }

    const ArrowInstance & _inst;
    const Host & _host;
    int _k;
    std::vector<std::uint8_t> _colour;
    std::vector<std::uint8_t> _bad;
    std::vector<long> _violation;
    std::vector<Graph> _cls;
    std::vector<int> _pool;
};

struct Restart
{
    bool ran = false, solved = false;
    std::uint64_t steps = 0;
    std::optional<EdgeColoring> witness;
};

} // namespace

auto arrow_randomized(const ArrowInstance & inst, const AnnealSchedule & schedule, std::uint64_t seed, int threads,
    const std::optional<EdgeColoring> & initial) -> ArrowVerdict
{
    validate(inst);
    const auto start = Clock::now();
    ArrowVerdict verdict;
    if (inst.deleted_budget > 0)
        verdict.note = "optional deletions unused by the randomized search";

    if (initial) {
        if (! fits_instance(*initial, inst))
            throw PreconditionViolated("initial colouring does not fit the instance");
        if (avoids_all_targets(*initial, inst.targets)) {
            verdict.arrows = Arrows::no;
            verdict.witness = *initial;
            verdict.note = "supplied colouring already avoids every target";
            verdict.stats.seconds = seconds_since(start);
            return verdict;
        }
    }

    const Host host = build_host(inst);
    if (host.order.empty())
        throw PreconditionViolated("host has no edges to colour");
    std::vector<Restart> results(std::max(schedule.restarts, 1));
    std::atomic<int> first_solved{INT_MAX};

    parallel_indices(static_cast<int>(results.size()), threads, [&](int r) {
        if (r > first_solved.load())
            return;
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        Annealer a(inst, host);
        a.start(rng, r == 0 ? initial : std::nullopt);
        auto & out = results[r];
        out.ran = true;
        const double ratio = schedule.end_temperature / schedule.start_temperature;
        for (std::uint64_t s = 0; s < schedule.steps && a.total() > 0; ++s) {
            double t = schedule.start_temperature * std::pow(ratio, static_cast<double>(s) / schedule.steps);
            a.step(rng, t, schedule.focus);
            out.steps = s + 1;
        }
        if (a.total() == 0) {
            out.solved = true;
            out.witness = a.coloring();
            int seen = first_solved.load();
            while (r < seen && ! first_solved.compare_exchange_weak(seen, r)) {
            }
        }
    });

    for (auto & r : results) {
        if (! r.ran)
            throw Error("internal error: restart skipped before the first success");
        verdict.stats.nodes += r.steps;
        if (r.solved) {
            verdict.arrows = Arrows::no;
            verdict.witness = checked_witness(inst, std::move(*r.witness));
            break;
        }
    }
    verdict.stats.seconds = seconds_since(start);
    return verdict;
}

} // namespace ramsey
