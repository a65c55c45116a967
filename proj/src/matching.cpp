#include <ramsey/matching.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ramsey {

namespace {

/**
 * Edmonds' blossom algorithm: alternating-tree search from a single root,
 * contracting odd cycles by redirecting `base`.
 */
class Blossom
{
public:
    explicit Blossom(const Graph & g) :
        mate(g.size(), -1), _g(g), _n(g.size()), _parent(_n, -1), _base(_n), _outer(_n, 0), _in_blossom(_n, 0)
    {
    }

    auto greedy_start() -> void
    {
        for (int v = 0; v < _n; ++v)
            if (mate[v] == -1)
                for (int w : _g.neighbours(v))
                    if (mate[w] == -1) {
                        mate[v] = w;
                        mate[w] = v;
                        break;
                    }
    }

    auto augment_all() -> void
    {
        for (int v = 0; v < _n; ++v)
            if (mate[v] == -1) {
                int end = search(v);
                if (end != -1)
                    flip(end);
            }
    }

    /// Grows the tree rooted at `root`; returns an exposed vertex at the end
    /// of an augmenting path, or -1. Afterwards `outer(v)` marks the vertices
    /// joined to root by an even alternating path.
    auto search(int root) -> int
    {
        std::fill(_parent.begin(), _parent.end(), -1);
        std::fill(_outer.begin(), _outer.end(), 0);
        std::iota(_base.begin(), _base.end(), 0);
        _outer[root] = 1;
        _queue.assign(1, root);

        for (std::size_t head = 0; head < _queue.size(); ++head) {
            int v = _queue[head];
            for (int to : _g.neighbours(v)) {
                if (_base[v] == _base[to] || mate[v] == to)
                    continue;
                if (to == root || (mate[to] != -1 && _parent[mate[to]] != -1)) {
                    int b = lca(v, to);
                    std::fill(_in_blossom.begin(), _in_blossom.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < _n; ++i)
                        if (_in_blossom[_base[i]]) {
                            _base[i] = b;
                            if (! _outer[i]) {
                                _outer[i] = 1;
                                _queue.push_back(i);
                            }
                        }
                }
                else if (_parent[to] == -1) {
                    _parent[to] = v;
                    if (mate[to] == -1)
                        return to;
                    _outer[mate[to]] = 1;
                    _queue.push_back(mate[to]);
                }
            }
        }
        return -1;
    }

    auto outer(int v) const -> bool { return _outer[v]; }

    std::vector<int> mate;

private:
    auto lca(int a, int b) -> int
    {
        std::vector<char> seen(_n, 0);
        while (true) {
            a = _base[a];
            seen[a] = 1;
            if (mate[a] == -1)
                break;
            a = _parent[mate[a]];
        }
        while (true) {
            b = _base[b];
            if (seen[b])
                return b;
            b = _parent[mate[b]];
        }
    }

    auto mark_path(int v, int b, int child) -> void
    {
        while (_base[v] != b) {
            _in_blossom[_base[v]] = _in_blossom[_base[mate[v]]] = 1;
            _parent[v] = child;
            child = mate[v];
            v = _parent[mate[v]];
        }
    }

    auto flip(int v) -> void
    {
        while (v != -1) {
            int pv = _parent[v], ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }

    const Graph & _g;
    int _n;
    std::vector<int> _parent, _base;
    std::vector<char> _outer, _in_blossom;
    std::vector<int> _queue;
};

auto certificate_from_mates(const std::vector<int> & mate) -> MatchingCertificate
{
    MatchingCertificate m;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v)
            m.edges.emplace_back(v, mate[v]);
    return m;
}

auto components_within(const Graph & g, const VertexSet & within) -> std::vector<VertexSet>
{
    Graph h = g.induced(within);
    std::vector<VertexSet> out;
    VertexSet remaining = within;
    while (! remaining.empty()) {
        auto c = component_of(h, remaining.first());
        remaining -= c;
        out.push_back(c);
    }
    return out;
}

auto floor_sqrt(int n) -> int
{
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace

auto verify_matching(const Graph & g, const MatchingCertificate & m) -> bool
{
    VertexSet used;
    for (const auto & e : m.edges) {
        if (e.u < 0 || e.v >= g.size() || e.u == e.v || ! g.adjacent(e.u, e.v))
            return false;
        if (used.test(e.u) || used.test(e.v))
            return false;
        used.set(e.u);
        used.set(e.v);
    }
    return true;
}

auto maximum_matching(const Graph & g) -> MatchingCertificate
{
    Blossom b(g);
    b.greedy_start();
    b.augment_all();
    return certificate_from_mates(b.mate);
}

auto best_component_matching(const Graph & g, bool require_nonbipartite) -> ComponentMatching
{
    auto m = maximum_matching(g);
    std::optional<ComponentMatching> best;
    for (const auto & c : components(g)) {
        if (require_nonbipartite && is_bipartite(g, c))
            continue;
        ComponentMatching cm{c, {}};
        for (const auto & e : m.edges)
            if (c.test(e.u))
                cm.matching.edges.push_back(e);
        if (! best || cm.matching.edges.size() > best->matching.edges.size())
            best = std::move(cm);
    }
    if (! best)
        throw NoQualifyingComponent("no non-bipartite component");
    return *best;
}

auto best_component_saturation(const Graph & g, bool require_nonbipartite) -> int
{
    if (! require_nonbipartite)
        return best_component_matching(g, false).matching.saturation();
    try {
        return best_component_matching(g, true).matching.saturation();
    }
    catch (const NoQualifyingComponent &) {
        return 0;
    }
}

auto gallai_edmonds(const Graph & g) -> GallaiEdmonds
{
    Blossom b(g);
    b.greedy_start();
    b.augment_all();

    GallaiEdmonds ge;
    for (int r = 0; r < g.size(); ++r) {
        if (b.mate[r] != -1)
            continue;
        b.search(r);
        for (int v = 0; v < g.size(); ++v)
            if (b.outer(v))
                ge.deficient.set(v);
    }
    for (int v : ge.deficient)
        ge.barrier |= g.neighbours(v);
    ge.barrier -= ge.deficient;
    ge.rest = g.vertices() - ge.deficient - ge.barrier;
    ge.matching_size = static_cast<int>(certificate_from_mates(b.mate).edges.size());
    return ge;
}

auto check_tutte_partition(const Graph & g, const TuttePartition & p) -> bool
{
    const int n = g.size();
    if (p.s.intersects(p.t) || p.s.intersects(p.u) || p.t.intersects(p.u))
        return false;
    if ((p.s | p.t | p.u) != g.vertices())
        return false;
    for (int v : p.t) {
        if (g.neighbours(v).intersects(p.u))
            return false;
        // deg_T(v) <= sqrt(n) - 1  <=>  (deg + 1)^2 <= n
        long d = (g.neighbours(v) & p.t).count();
        if ((d + 1) * (d + 1) > n)
            return false;
    }
    // |U| + 2|S| < n_target + sqrt(n)
    Integer excess = Integer(p.u.count() + 2 * p.s.count() - p.n_target);
    return less_than_sqrt(excess, Integer(n));
}

auto tutte_partition(const Graph & g, int n_target) -> TuttePartition
{
    auto ge = gallai_edmonds(g);
    if (2 * ge.matching_size >= n_target)
        throw PreconditionViolated("graph has a matching saturating " + std::to_string(2 * ge.matching_size)
            + " >= " + std::to_string(n_target) + " vertices");

    TuttePartition p;
    p.n_target = n_target;
    p.s = ge.barrier;
    const int small = floor_sqrt(g.size());
    for (const auto & c : components_within(g, g.vertices() - p.s))
        (c.count() <= small ? p.t : p.u) |= c;

    if (! check_tutte_partition(g, p))
        throw Error("tutte_partition: barrier partition failed its own check");
    return p;
}

auto check_bipartite_split(const Graph & g, const BipartiteSplit & s) -> bool
{
    if (s.bipartite_part.intersects(s.rest) || (s.bipartite_part | s.rest) != g.vertices())
        return false;
    for (int v : s.bipartite_part)
        if (g.neighbours(v).intersects(s.rest))
            return false;
    if (! is_bipartite(g, s.bipartite_part))
        return false;
    return Rational(g.edges_within(s.rest)) <= s.alpha * s.n_scale * s.rest.count() / 2;
}

auto bipartite_split(const Graph & g, const Rational & alpha, int n_scale) -> BipartiteSplit
{
    if (alpha <= 0 || n_scale <= 0)
        throw OutOfRange("alpha and n_scale must be positive");

    BipartiteSplit s;
    s.alpha = alpha;
    s.n_scale = n_scale;
    auto m = maximum_matching(g);
    for (const auto & c : components(g)) {
        if (is_bipartite(g, c)) {
            s.bipartite_part |= c;
            continue;
        }
        ComponentMatching cm{c, {}};
        for (const auto & e : m.edges)
            if (c.test(e.u))
                cm.matching.edges.push_back(e);
        if (Rational(cm.matching.saturation()) >= alpha * n_scale)
            throw LargeNonBipartiteMatching("non-bipartite component has a matching saturating "
                    + std::to_string(cm.matching.saturation()) + " >= alpha*n vertices",
                std::move(cm));
        s.rest |= c;
    }

    if (! check_bipartite_split(g, s))
        throw Error("bipartite_split: split failed its own check");
    return s;
}

auto check_closed_walk(const Graph & g, const ClosedWalk & w, const MatchingCertificate & m, WalkParity parity,
    const VertexSet & component) -> bool
{
    const int p = w.length();
    if (p < 2)
        return false;
    if ((p % 2 == 1) != (parity == WalkParity::odd))
        return false;
    std::vector<Edge> steps;
    for (int i = 0; i < p; ++i) {
        int a = w.vertices[i], b = w.vertices[(i + 1) % p];
        if (a < 0 || a >= g.size() || b < 0 || b >= g.size() || ! component.test(a) || ! g.adjacent(a, b))
            return false;
        steps.emplace_back(a, b);
    }
    std::sort(steps.begin(), steps.end());
    for (const auto & e : m.edges)
        if (! std::binary_search(steps.begin(), steps.end(), e))
            return false;
    return true;
}

namespace {

struct UnionFind
{
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    auto find(int v) -> int
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }
    auto unite(int a, int b) -> void { parent[find(a)] = find(b); }
};

class WalkBuilder
{
public:
    WalkBuilder(const Graph & forest) : _forest(forest), _used(forest.size()) {}

    /// Appends the vertices after `x` of a tour traversing every unused
    /// forest edge reachable from x twice, ending back at x.
    auto excursion(int x, std::vector<int> & out) -> void
    {
        for (int y : _forest.neighbours(x)) {
            if (_used[std::min(x, y)].test(std::max(x, y)))
                continue;
            _used[std::min(x, y)].set(std::max(x, y));
            out.push_back(y);
            excursion(y, out);
            out.push_back(x);
        }
    }

private:
    const Graph & _forest;
    std::vector<VertexSet> _used;
};

} // namespace

auto closed_walk_through_matching(const Graph & g, const MatchingCertificate & m, WalkParity parity) -> ClosedWalk
{
    if (m.edges.empty())
        throw PreconditionViolated("matching is empty");
    if (! verify_matching(g, m))
        throw PreconditionViolated("not a matching of the graph");
    const VertexSet comp = component_of(g, m.edges.front().u);
    VertexSet terminals;
    for (const auto & e : m.edges) {
        if (! comp.test(e.u))
            throw PreconditionViolated("matching edges span several components");
        terminals.set(e.u);
        terminals.set(e.v);
    }

    std::vector<int> cycle;
    if (parity == WalkParity::odd) {
        auto c = odd_cycle(g, comp);
        if (! c)
            throw PreconditionViolated("component is bipartite; no odd closed walk exists");
        cycle = *c;
    }

    const int n = g.size();
    Graph forest(n);
    UnionFind uf(n);
    VertexSet core;
    std::vector<Edge> cycle_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        core.set(cycle[i]);
        uf.unite(cycle[i], cycle.front());
        cycle_edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());
    terminals |= core;

    for (const auto & e : m.edges) {
        if (std::binary_search(cycle_edges.begin(), cycle_edges.end(), e))
            continue;
        forest.add_edge(e.u, e.v);
        uf.unite(e.u, e.v);
    }

    // Join the groups: breadth-first from the group of the first terminal
    // through untouched vertices, stopping at the first vertex of another group.
    VertexSet touched = terminals;
    const int start = cycle.empty() ? m.edges.front().u : cycle.front();
    while (true) {
        int root = uf.find(start);
        VertexSet sources;
        bool split = false;
        for (int v : touched) {
            if (uf.find(v) == root)
                sources.set(v);
            else
                split = true;
        }
        if (! split)
            break;

        std::vector<int> parent(n, -1), queue = sources.members();
        VertexSet seen = sources;
        int hit = -1;
        for (std::size_t head = 0; head < queue.size() && hit == -1; ++head) {
            int u = queue[head];
            for (int v : g.neighbours(u) - seen) {
                seen.set(v);
                parent[v] = u;
                if (touched.test(v)) {
                    hit = v;
                    break;
                }
                queue.push_back(v);
            }
        }
        if (hit == -1)
            throw Error("closed_walk_through_matching: groups not connected");
        for (int v = hit; ! sources.test(v); v = parent[v]) {
            forest.add_edge(v, parent[v]);
            uf.unite(v, parent[v]);
            touched.set(v);
            touched.set(parent[v]);
        }
    }

    // Minimality: drop forest leaves that no terminal needs.
    bool pruned = true;
    while (pruned) {
        pruned = false;
        for (int v = 0; v < n; ++v)
            if (forest.degree(v) == 1 && ! terminals.test(v)) {
                forest.remove_edge(v, forest.neighbours(v).first());
                pruned = true;
            }
    }

    ClosedWalk w;
    WalkBuilder builder(forest);
    if (cycle.empty()) {
        w.vertices.push_back(start);
        builder.excursion(start, w.vertices);
        w.vertices.pop_back();
    }
    else
        for (int x : cycle) {
            w.vertices.push_back(x);
            builder.excursion(x, w.vertices);
        }

    if (! check_closed_walk(g, w, m, parity, comp))
        throw Error("closed_walk_through_matching: walk failed its own check");
    return w;
}

} // namespace ramsey
