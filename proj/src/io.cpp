#include <ramsey/errors.hpp>
#include <ramsey/io.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ramsey {

namespace {

    auto need(const Json & j, const char * key) -> const Json &
    {
        if (! j.is_object() || ! j.contains(key))
            throw ParseError(std::string("missing field '") + key + "'");
        return j.at(key);
    }

    auto as_int(const Json & j, const char * what) -> int
    {
        if (! j.is_number_integer())
            throw ParseError(std::string(what) + " must be an integer");
        return j.get<int>();
    }

    auto edge_from(const Json & j, std::size_t arity) -> std::vector<int>
    {
        if (! j.is_array() || j.size() != arity)
            throw ParseError("edge entries must be arrays of " + std::to_string(arity) + " integers");
        std::vector<int> out;
        for (const auto & x : j)
            out.push_back(as_int(x, "edge entry"));
        return out;
    }

    auto holes_from(const Json & j) -> HoleSpec
    {
        HoleSpec h;
        if (! j.contains("holes"))
            return h;
        for (const auto & hole : j.at("holes")) {
            VertexSet s;
            for (const auto & v : hole) {
                int x = as_int(v, "hole member");
                if (x < 0 || x >= max_vertices)
                    throw OutOfRange("hole member " + std::to_string(x) + " out of range");
                s.set(x);
            }
            h.holes.push_back(s);
        }
        return h;
    }

    auto deleted_from(const Json & j) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        if (! j.contains("deleted"))
            return out;
        for (const auto & e : j.at("deleted")) {
            auto p = edge_from(e, 2);
            out.emplace_back(p[0], p[1]);
        }
        return out;
    }

    auto holes_to(const HoleSpec & h) -> Json
    {
        Json out = Json::array();
        for (const auto & s : h.holes)
            out.push_back(vertex_set_to_json(s));
        return out;
    }

    auto edges_to(const std::vector<Edge> & es) -> Json
    {
        Json out = Json::array();
        for (auto e : es)
            out.push_back({e.u, e.v});
        return out;
    }

} // namespace

auto vertex_set_to_json(const VertexSet & s) -> Json
{
    Json out = Json::array();
    for (int v : s)
        out.push_back(v);
    return out;
}

auto graph_to_json(const Graph & g) -> Json
{
    return {{"n", g.size()}, {"edges", edges_to(g.edges())}};
}

auto graph_from_json(const Json & j) -> Graph
{
    Graph g(as_int(need(j, "n"), "n"));
    for (const auto & e : need(j, "edges")) {
        auto p = edge_from(e, 2);
        if (p[0] < 0 || p[1] < 0 || p[0] >= g.size() || p[1] >= g.size() || p[0] == p[1])
            throw OutOfRange("edge (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ") invalid");
        g.add_edge(p[0], p[1]);
    }
    return g;
}

auto coloring_to_json(const EdgeColoring & c) -> Json
{
    Json edges = Json::array();
    for (int v = 1; v < c.size(); ++v)
        for (int u = 0; u < v; ++u)
            if (c.in_host(u, v) && c.color(u, v) != 0)
                edges.push_back({u, v, c.color(u, v)});
    return {{"n", c.size()}, {"k", c.colors()}, {"holes", holes_to(c.holes())}, {"deleted", edges_to(c.deleted())},
        {"edges", edges}};
}

auto coloring_from_json(const Json & j) -> EdgeColoring
{
    EdgeColoring c(as_int(need(j, "n"), "n"), as_int(need(j, "k"), "k"), holes_from(j), deleted_from(j));
    std::set<Edge> seen;
    for (const auto & e : need(j, "edges")) {
        auto p = edge_from(e, 3);
        if (p[0] < 0 || p[1] < 0 || p[0] >= c.size() || p[1] >= c.size() || p[0] == p[1])
            throw InvalidColoring("edge (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ") invalid");
        Edge key(p[0], p[1]);
        if (! seen.insert(key).second)
            throw InvalidColoring("pair (" + std::to_string(key.u) + "," + std::to_string(key.v) + ") listed twice");
        if (! c.in_host(key.u, key.v))
            throw InvalidColoring(
                "pair (" + std::to_string(key.u) + "," + std::to_string(key.v) + ") is a hole or deleted pair");
        if (p[2] < 1 || p[2] > c.colors())
            throw InvalidColoring("colour " + std::to_string(p[2]) + " outside 1.." + std::to_string(c.colors()));
        c.set_color(key.u, key.v, p[2]);
    }
    c.validate();
    return c;
}

auto instance_to_json(const ArrowInstance & inst) -> Json
{
    Json targets = Json::array();
    for (const auto & t : inst.targets)
        targets.push_back(target_name(t));
    return {{"n", inst.n}, {"holes", holes_to(inst.holes)}, {"deleted", edges_to(inst.deleted)},
        {"deleted_budget", inst.deleted_budget}, {"targets", targets}};
}

auto instance_from_json(const Json & j) -> ArrowInstance
{
    ArrowInstance inst;
    inst.n = as_int(need(j, "n"), "n");
    inst.holes = holes_from(j);
    inst.deleted = deleted_from(j);
    if (j.contains("deleted_budget"))
        inst.deleted_budget = as_int(j.at("deleted_budget"), "deleted_budget");
    for (const auto & t : need(j, "targets")) {
        if (! t.is_string())
            throw ParseError("targets must be strings such as \"C5\" or \"M4n\"");
        inst.targets.push_back(parse_target(t.get<std::string>()));
    }
    if (j.contains("k") && as_int(j.at("k"), "k") != static_cast<int>(inst.targets.size()))
        throw ParseError("k disagrees with the number of targets");
    validate(inst);
    return inst;
}

auto instance_has_coloring(const Json & j) -> bool
{
    return j.is_object() && j.contains("edges");
}

auto cycle_to_json(const CycleCertificate & c) -> Json
{
    return c.vertices;
}

auto matching_to_json(const MatchingCertificate & m) -> Json
{
    return edges_to(m.edges);
}

auto verdict_to_json(const ArrowVerdict & v, bool timing) -> Json
{
    Json out = {{"arrows", arrows_name(v.arrows)}};
    out["stats"] = {{"nodes", v.stats.nodes}, {"prunes", v.stats.prunes}};
    if (timing)
        out["stats"]["seconds"] = v.stats.seconds;
    if (! v.note.empty())
        out["note"] = v.note;
    if (v.witness)
        out["witness"] = coloring_to_json(*v.witness);
    return out;
}

auto construction_to_json(const ConstructionReport & r) -> Json
{
    Json parts = Json::array();
    for (const auto & p : r.parts)
        parts.push_back({{"name", p.name}, {"first", p.first}, {"size", p.size}});
    Json claims = Json::array();
    for (std::size_t i = 0; i < r.claims.size(); ++i) {
        const auto & c = r.claims[i];
        Json entry = {{"color", c.color}, {"kind", claim_kind_name(c.kind)}};
        if (c.kind == ClaimKind::no_cycle_at_least)
            entry["bound"] = c.bound;
        entry["informational"] = c.informational;
        if (! c.note.empty())
            entry["note"] = c.note;
        if (i < r.verdicts.size()) {
            const auto & v = r.verdicts[i];
            entry["status"] = claim_status_name(v.status);
            entry["method"] = v.method;
            if (v.witness)
                entry["witness"] = cycle_to_json(*v.witness);
        }
        claims.push_back(entry);
    }
    return {{"id", r.id}, {"lengths", r.lengths}, {"n", r.coloring.size()}, {"parts", parts}, {"claims", claims},
        {"all_hold", r.all_hold()}};
}

auto lemma_report_to_json(const LemmaReport & r) -> Json
{
    Json header = Json::object();
    for (const auto & [k, v] : r.header)
        header[k] = v;
    Json failures = Json::array();
    for (const auto & f : r.failure_list) {
        Json entry = {{"sample", f.sample}, {"kind", f.kind}, {"detail", f.detail},
            {"hypotheses_hold", f.hypotheses_hold}};
        if (f.graph)
            entry["graph"] = graph_to_json(*f.graph);
        if (f.coloring)
            entry["coloring"] = coloring_to_json(*f.coloring);
        failures.push_back(entry);
    }
    return {{"lemma", lemma_name(r.params.id)}, {"header", header}, {"samples", r.samples},
        {"uniform_samples", r.uniform_samples}, {"adversarial_samples", r.adversarial_samples},
        {"passes", r.passes}, {"failures", r.failures}, {"rejected", r.rejected}, {"min_slack", r.min_slack},
        {"unmet_scale_conditions", r.unmet_scale_conditions},
        {"note", "the lemmas hold for every n > n0; a finite failure does not refute them"},
        {"failure_list", failures}};
}

auto read_json_file(const std::string & path) -> Json
{
    std::ifstream in(path);
    if (! in)
        throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

auto write_json_file(const std::string & path, const Json & j) -> void
{
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace ramsey
