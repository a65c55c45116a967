#include <ramsey/cycles.hpp>
#include <ramsey/errors.hpp>

#include <algorithm>
#include <string>

namespace ramsey {

auto parity_matches(Parity p, int length) -> bool
{
    switch (p) {
    case Parity::any: return true;
    case Parity::odd: return length % 2 == 1;
    case Parity::even: return length % 2 == 0;
    }
    return false;
}

namespace {

enum class Mode
{
    first_hit,
    maximise
};

/// Largest value <= x with the given parity, or -1.
auto round_down_to_parity(int x, Parity p) -> int
{
    if (p == Parity::any || parity_matches(p, x))
        return x;
    return x - 1;
}

/**
 * Depth-first enumeration of simple paths anchored at their smallest vertex.
 * A node is pruned when the vertices still reachable from the path end
 * cannot lift the path to an admissible length, or cannot lead back to the
 * anchor. Each undirected cycle is accepted in one direction only
 * (second vertex smaller than last), so the first hit is deterministic.
 */
class CycleSearcher
{
public:
    CycleSearcher(const Graph & g, int min_len, int max_len, Parity parity, Mode mode, CycleBudget budget) :
        _g(g), _min_len(min_len), _max_len(max_len), _parity(parity), _mode(mode), _budget(budget.max_expansions)
    {
    }

    auto run() -> CycleSearchResult
    {
        CycleSearchResult result;
        if (_parity == Parity::odd && is_bipartite(_g, _g.vertices())) {
            result.status = SearchStatus::absent;
            return result;
        }

        const int n = _g.size();
        for (int anchor = 0; anchor < n && ! _stop; ++anchor) {
            if (_g.degree(anchor) < 2)
                continue;
            VertexSet upper = _g.vertices();
            for (int v = 0; v <= anchor; ++v)
                upper.reset(v);
            VertexSet region = component_of(_g.induced(upper | VertexSet::of({anchor})), anchor);
            int reachable = round_down_to_parity(std::min(region.count(), _max_len), _parity);
            if (reachable < std::max(_min_len, 3))
                continue;
            if (_mode == Mode::maximise && reachable <= _best_len)
                continue;

            _anchor = anchor;
            _allowed = region;
            _allowed.reset(anchor);
            _on_path = VertexSet{};
            _path.assign(1, anchor);
            extend(anchor);
        }

        result.expansions = _expansions;
        if (_out_of_budget) {
            result.status = SearchStatus::budget_exceeded;
            if (_best)
                result.cycle = CycleCertificate{*_best};
            return result;
        }
        if (_best) {
            result.status = SearchStatus::found;
            result.cycle = CycleCertificate{*_best};
        }
        return result;
    }

private:
    auto extend(int end) -> void
    {
        if (++_expansions > _budget) {
            _out_of_budget = true;
            _stop = true;
            return;
        }

        const int len = static_cast<int>(_path.size());
        if (len >= 3 && len >= _min_len && len <= _max_len && parity_matches(_parity, len)
            && _g.adjacent(end, _anchor) && _path[1] < end) {
            if (_mode == Mode::first_hit || len > _best_len) {
                _best = _path;
                _best_len = len;
                if (_mode == Mode::first_hit) {
                    _stop = true;
                    return;
                }
            }
        }
        if (len >= _max_len)
            return;

        VertexSet free = _allowed - _on_path;
        VertexSet candidates = _g.neighbours(end) & free;
        if (candidates.empty())
            return;

        VertexSet reach = candidates, frontier = candidates;
        while (! frontier.empty()) {
            VertexSet grown;
            for (int v : frontier)
                grown |= _g.neighbours(v);
            grown &= free;
            grown -= reach;
            reach |= grown;
            frontier = grown;
        }
        if (! reach.intersects(_g.neighbours(_anchor)))
            return;
        int cap = round_down_to_parity(std::min(len + reach.count(), _max_len), _parity);
        if (cap < _min_len || cap < 3)
            return;
        if (_mode == Mode::maximise && cap <= _best_len)
            return;

        for (int v : candidates) {
            _path.push_back(v);
            _on_path.set(v);
            extend(v);
            _on_path.reset(v);
            _path.pop_back();
            if (_stop)
                return;
        }
    }

    const Graph & _g;
    int _min_len, _max_len;
    Parity _parity;
    Mode _mode;
    std::uint64_t _budget;

    std::uint64_t _expansions = 0;
    bool _out_of_budget = false, _stop = false;
    int _anchor = 0;
    VertexSet _allowed, _on_path;
    std::vector<int> _path;
    int _best_len = 0;
    std::optional<std::vector<int>> _best;
};

} // namespace

auto has_cycle_of_length(const Graph & g, int length, CycleBudget budget) -> CycleSearchResult
{
    if (length < 3)
        throw OutOfRange("cycle length must be at least 3");
    return CycleSearcher(g, length, length, Parity::any, Mode::first_hit, budget).run();
}

auto has_cycle_at_least(const Graph & g, int min_length, CycleBudget budget) -> CycleSearchResult
{
    return CycleSearcher(g, std::max(min_length, 3), g.size(), Parity::any, Mode::first_hit, budget).run();
}

auto longest_cycle(const Graph & g, Parity parity, CycleBudget budget) -> CycleSearchResult
{
    return CycleSearcher(g, 3, g.size(), parity, Mode::maximise, budget).run();
}

auto verify_cycle(const Graph & g, const CycleCertificate & c) -> bool
{
    const int len = c.length();
    if (len < 3)
        return false;
    VertexSet seen;
    for (int v : c.vertices) {
        if (v < 0 || v >= g.size() || seen.test(v))
            return false;
        seen.set(v);
    }
    for (int i = 0; i < len; ++i)
        if (! g.adjacent(c.vertices[i], c.vertices[(i + 1) % len]))
            return false;
    return true;
}

namespace {

auto path_search(const Graph & g, int at, int to, int remaining, VertexSet & used) -> bool
{
    if (remaining == 1)
        return g.adjacent(at, to);
    VertexSet free = g.vertices() - used;
    if (remaining == 2)
        return ! (g.neighbours(at) & g.neighbours(to) & free).empty();
    // breadth-first distance to `to` through unused vertices must fit
    // and the reachable region must hold enough vertices
    VertexSet seen = VertexSet::of({at}), frontier = seen;
    int dist = 0, dist_to = -1;
    while (! frontier.empty()) {
        VertexSet grown;
        for (int v : frontier)
            grown |= g.neighbours(v);
        grown &= free;
        grown -= seen;
        seen |= grown;
        frontier = grown;
        ++dist;
        if (dist_to < 0 && seen.test(to))
            dist_to = dist;
    }
    if (dist_to < 0 || dist_to > remaining || seen.count() < remaining + 1)
        return false;

    VertexSet next = g.neighbours(at) & free;
    next.reset(to);
    for (int v : next) {
        used.set(v);
        bool ok = path_search(g, v, to, remaining - 1, used);
        used.reset(v);
        if (ok)
            return true;
    }
    return false;
}

} // namespace

auto has_path_of_length(const Graph & g, int from, int to, int edges) -> bool
{
    if (from == to || edges < 1 || edges >= g.size())
        return false;
    VertexSet used = VertexSet::of({from});
    return path_search(g, from, to, edges, used);
}

namespace {

class BlockFinder
{
public:
    explicit BlockFinder(const Graph & g) : _g(g), _disc(g.size(), -1), _low(g.size(), 0) {}

    auto run() -> std::vector<VertexSet>
    {
        for (int v = 0; v < _g.size(); ++v)
            if (_disc[v] == -1 && _g.degree(v) > 0)
                visit(v, -1);
        return std::move(_blocks);
    }

private:
    auto visit(int u, int parent) -> void
    {
        _disc[u] = _low[u] = _time++;
        for (int v : _g.neighbours(u)) {
            if (v == parent)
                continue;
            if (_disc[v] == -1) {
                _stack.emplace_back(u, v);
                visit(v, u);
                _low[u] = std::min(_low[u], _low[v]);
                if (_low[v] >= _disc[u]) {
                    VertexSet block;
                    while (true) {
                        auto [a, b] = _stack.back();
                        _stack.pop_back();
                        block.set(a);
                        block.set(b);
                        if (a == u && b == v)
                            break;
                    }
                    _blocks.push_back(block);
                }
            }
            else if (_disc[v] < _disc[u]) {
                _stack.emplace_back(u, v);
                _low[u] = std::min(_low[u], _disc[v]);
            }
        }
    }

    const Graph & _g;
    std::vector<int> _disc, _low;
    int _time = 0;
    std::vector<std::pair<int, int>> _stack;
    std::vector<VertexSet> _blocks;
};

// twice the edge count strictly above (m-1)(|A|-1)
auto dense_enough(const Graph & g, const VertexSet & a, int m) -> bool
{
    return 2 * g.edges_within(a) > static_cast<long>(m - 1) * (a.count() - 1);
}

/// Maximal path with Posa rotations; returns a cycle of length >= m if the
/// closures through either endpoint's neighbourhood reach it.
auto rotation_closure(const Graph & h, const VertexSet & active, int m) -> std::optional<CycleCertificate>
{
    std::vector<int> path{active.first()};
    VertexSet on = VertexSet::of({path[0]});

    auto extend_end = [&]() {
        while (true) {
            VertexSet off = h.neighbours(path.back()) & active;
            off -= on;
            int next = off.first();
            if (next == -1)
                return;
            path.push_back(next);
            on.set(next);
        }
    };

    const int rounds = 4 * active.count();
    for (int round = 0; round < rounds; ++round) {
        extend_end();
        std::reverse(path.begin(), path.end());
        extend_end();

        const int k = static_cast<int>(path.size()) - 1;
        std::vector<int> index(h.size(), -1);
        for (int i = 0; i <= k; ++i)
            index[path[i]] = i;

        // Closure through the end's earliest neighbour on the path.
        for (int side = 0; side < 2; ++side) {
            int end = side == 0 ? path[k] : path[0];
            int best = side == 0 ? k : 0;
            for (int w : h.neighbours(end) & active) {
                if (side == 0)
                    best = std::min(best, index[w]);
                else
                    best = std::max(best, index[w]);
            }
            int len = side == 0 ? k - best + 1 : best + 1;
            if (len >= m && len >= 3) {
                CycleCertificate c;
                if (side == 0)
                    c.vertices.assign(path.begin() + best, path.end());
                else
                    c.vertices.assign(path.begin(), path.begin() + best + 1);
                return c;
            }
        }

        // Crossing pair x0 ~ x_{j+1}, xk ~ x_j closes the whole path.
        if (k + 1 >= m) {
            for (int j = 0; j + 1 < k; ++j)
                if (h.adjacent(path[0], path[j + 1]) && h.adjacent(path[k], path[j])) {
                    CycleCertificate c;
                    c.vertices.assign(path.begin(), path.begin() + j + 1);
                    for (int i = k; i >= j + 1; --i)
                        c.vertices.push_back(path[i]);
                    return c;
                }
        }

        // Rotate at the end: pick the (round)-th eligible pivot so that
        // successive rounds visit different endpoints.
        std::vector<int> pivots;
        for (int w : h.neighbours(path[k]) & active)
            if (index[w] <= k - 2)
                pivots.push_back(index[w]);
        if (pivots.empty())
            break;
        int i = pivots[round % pivots.size()];
        std::reverse(path.begin() + i + 1, path.end());
    }
    return std::nullopt;
}

} // namespace

auto biconnected_blocks(const Graph & g) -> std::vector<VertexSet>
{
    return BlockFinder(g).run();
}

auto erdos_gallai_cycle(const Graph & g, int m, CycleBudget budget) -> CycleCertificate
{
    const int n = g.size();
    if (m < 3 || m > n)
        throw PreconditionViolated("cycle bound m=" + std::to_string(m) + " outside 3.." + std::to_string(n));
    // |E| >= (m-1)(n-1)/2 + 1
    if (2 * g.edge_count() < static_cast<long>(m - 1) * (n - 1) + 2)
        throw PreconditionViolated("edge count below (m-1)(n-1)/2+1");

    // Both reductions keep 2|E(A)| > (m-1)(|A|-1), so A never empties.
    VertexSet active = g.vertices();
    Graph h = g;
    while (true) {
        bool stripped = true;
        while (stripped) {
            stripped = false;
            for (int v : active)
                if (2 * (h.neighbours(v) & active).count() < m) {
                    active.reset(v);
                    stripped = true;
                }
        }
        h = g.induced(active);

        auto blocks = biconnected_blocks(h);
        auto dense = std::find_if(blocks.begin(), blocks.end(), [&](const VertexSet & b) { return dense_enough(h, b, m); });
        if (dense == blocks.end())
            throw Error("erdos_gallai_cycle: no dense block after reduction");
        if (*dense == active)
            break;
        active = *dense;
        h = g.induced(active);
    }

    if (auto c = rotation_closure(h, active, m))
        return *c;

    auto exact = has_cycle_at_least(h, m, budget);
    if (exact.status == SearchStatus::found)
        return *exact.cycle;
    if (exact.status == SearchStatus::budget_exceeded)
        throw BudgetExceeded("erdos_gallai_cycle: exact fallback exceeded its budget");
    throw Error("erdos_gallai_cycle: reduced graph has no long cycle");
}

} // namespace ramsey
