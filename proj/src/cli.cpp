#include <ramsey/bounds.hpp>
#include <ramsey/cli.hpp>
#include <ramsey/constructions.hpp>
#include <ramsey/errors.hpp>
#include <ramsey/io.hpp>
#include <ramsey/lemma.hpp>
#include <ramsey/matching.hpp>
#include <ramsey/rng.hpp>
#include <ramsey/search.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace ramsey {

auto fnv1a(const std::string & text) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

    struct Common
    {
        std::uint64_t seed = default_seed;
        int threads = 1;
        std::string format = "human";
        bool timing = false;
        std::uint64_t node_budget = 2'000'000'000;
        std::uint64_t cycle_budget = 100'000'000;
    };

    /// What a subcommand hands to the emitter.
    struct Outcome
    {
        Json config = Json::object();
        Json result = Json::object();
        std::string human;
        int code = exit_code::ok;
    };

    auto split(const std::string & text, char sep) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, sep))
            if (! item.empty())
                out.push_back(item);
        return out;
    }

    auto parse_int(const std::string & s) -> int
    {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        }
        catch (const std::exception &) {
            throw ParseError("'" + s + "' is not an integer");
        }
        if (used != s.size())
            throw ParseError("'" + s + "' is not an integer");
        return v;
    }

    auto int_list(const std::string & text, std::size_t count, const char * what) -> std::vector<int>
    {
        std::vector<int> out;
        for (const auto & s : split(text, ','))
            out.push_back(parse_int(s));
        if (out.size() != count)
            throw ParseError(std::string(what) + " needs " + std::to_string(count) + " comma-separated integers");
        return out;
    }

    auto rational_list(const std::string & text, std::size_t count, const char * what) -> std::vector<Rational>
    {
        std::vector<Rational> out;
        for (const auto & s : split(text, ','))
            out.push_back(parse_rational(s));
        if (out.size() != count)
            throw ParseError(std::string(what) + " needs " + std::to_string(count) + " comma-separated rationals");
        return out;
    }

    /// "C3:1,C5:2" or "C3,C5"; a ":c" suffix names the colour explicitly.
    auto target_list(const std::string & text) -> std::vector<Target>
    {
        auto items = split(text, ',');
        std::vector<std::optional<Target>> slots(items.size());
        bool explicit_colour = false;
        for (std::size_t i = 0; i < items.size(); ++i) {
            auto colon = items[i].find(':');
            if ((colon != std::string::npos) != (i == 0 ? colon != std::string::npos : explicit_colour))
                throw ParseError("give a colour for every target or for none");
            if (i == 0)
                explicit_colour = colon != std::string::npos;
            std::size_t slot = i;
            if (explicit_colour) {
                int c = parse_int(items[i].substr(colon + 1));
                if (c < 1 || c > static_cast<int>(items.size()))
                    throw ParseError("target colour " + std::to_string(c) + " out of range");
                slot = static_cast<std::size_t>(c - 1);
            }
            if (slots[slot])
                throw ParseError("two targets for colour " + std::to_string(slot + 1));
            slots[slot] = parse_target(items[i].substr(0, colon));
        }
        std::vector<Target> out;
        for (auto & s : slots)
            out.push_back(*s);
        return out;
    }

    /// "0,1,2;3,4"
    auto hole_list(const std::string & text) -> HoleSpec
    {
        HoleSpec h;
        for (const auto & group : split(text, ';')) {
            VertexSet s;
            for (const auto & v : split(group, ',')) {
                int x = parse_int(v);
                if (x < 0 || x >= max_vertices)
                    throw OutOfRange("hole member " + v + " out of range");
                s.set(x);
            }
            h.holes.push_back(s);
        }
        return h;
    }

    auto target_names(const std::vector<Target> & ts) -> Json
    {
        Json out = Json::array();
        for (const auto & t : ts)
            out.push_back(target_name(t));
        return out;
    }

    auto join(const std::vector<int> & xs, const char * sep = " ") -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += (i ? sep : "") + std::to_string(xs[i]);
        return out;
    }

    auto hex(std::uint64_t v) -> std::string
    {
        std::ostringstream s;
        s << std::hex << std::setw(16) << std::setfill('0') << v;
        return s.str();
    }

    // ------------------------------------------------------------ output

    auto csv_cell(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s)
            out += c == '"' ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
    }

    /// Flattens objects into dotted keys; arrays of scalars or arrays stay
    /// one compact JSON cell, arrays of objects are indexed.
    auto flatten(const Json & j, const std::string & prefix, std::ostream & out) -> void
    {
        if (j.is_object()) {
            for (const auto & [k, v] : j.items())
                flatten(v, prefix.empty() ? k : prefix + "." + k, out);
            return;
        }
        if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json & x) { return x.is_object(); })) {
            for (std::size_t i = 0; i < j.size(); ++i)
                flatten(j[i], prefix + "." + std::to_string(i), out);
            return;
        }
        out << csv_cell(prefix) << ',' << csv_cell(j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }

    auto emit(const std::string & command, const Common & common, const Outcome & o, std::ostream & out) -> void
    {
        std::string hash = hex(fnv1a(command + o.config.dump()));
        if (common.format == "human") {
            out << o.human;
            out << "version " << tool_version << ", seed " << common.seed << ", config " << hash << '\n';
            return;
        }
        Json envelope = {{"tool", "ramsey"}, {"version", tool_version}, {"command", command}, {"seed", common.seed},
            {"config_hash", hash}, {"config", o.config}, {"result", o.result}};
        if (common.format == "json")
            out << envelope.dump(2) << '\n';
        else {
            out << "key,value\n";
            flatten(envelope, "", out);
        }
    }

    // ------------------------------------------------------ graph inputs

    struct GraphInput
    {
        std::string graph_path, coloring_path;
        int color = 0;

        auto add_to(CLI::App * sub) -> void
        {
            sub->add_option("--graph", graph_path, "graph file {n, edges}");
            sub->add_option("--coloring", coloring_path, "colouring file; use with --color");
            sub->add_option("--color", color, "colour class to analyse");
        }

        auto load() const -> Graph
        {
            if (graph_path.empty() == coloring_path.empty())
                throw ParseError("give exactly one of --graph or --coloring");
            if (! graph_path.empty())
                return graph_from_json(read_json_file(graph_path));
            auto c = coloring_from_json(read_json_file(coloring_path));
            if (color < 1 || color > c.colors())
                throw OutOfRange("--color must be in 1.." + std::to_string(c.colors()));
            return color_class(c, color);
        }

        auto describe() const -> Json
        {
            return coloring_path.empty() ? Json{{"input", "graph"}} : Json{{"input", "coloring"}, {"color", color}};
        }
    };

    // ---------------------------------------------------------- construct

    struct ConstructArgs
    {
        int odd_triple = 0, four_part = 0;
        std::string eeo_four, eeo_three, oee_four, out_path, report_path;
    };

    auto do_construct(const ConstructArgs & a, const Common & common) -> Outcome
    {
        int chosen = (a.odd_triple > 0) + (a.four_part > 0) + ! a.eeo_four.empty() + ! a.eeo_three.empty()
            + ! a.oee_four.empty();
        if (chosen != 1)
            throw ParseError("choose exactly one builder");
        ConstructionReport r;
        if (a.odd_triple > 0)
            r = build_odd_triple(a.odd_triple);
        else if (a.four_part > 0)
            r = build_four_part_cliques(a.four_part);
        else if (! a.eeo_four.empty()) {
            auto m = int_list(a.eeo_four, 2, "--eeo-four-part");
            r = build_eeo_four_part(m[0], m[1]);
        } else if (! a.eeo_three.empty()) {
            auto m = int_list(a.eeo_three, 3, "--eeo-three-part");
            r = build_eeo_three_part(m[0], m[1], m[2]);
        } else {
            auto m = int_list(a.oee_four, 2, "--oee-four-part");
            r = build_oee_four_part(m[0], m[1]);
        }
        r = verify_claims(std::move(r), CycleBudget{common.cycle_budget});

        Outcome o;
        o.config = {{"builder", r.id}, {"lengths", r.lengths}, {"cycle_budget", common.cycle_budget}};
        o.result = construction_to_json(r);
        if (! a.out_path.empty())
            write_json_file(a.out_path, coloring_to_json(r.coloring));
        if (! a.report_path.empty())
            write_json_file(a.report_path, o.result);

        std::ostringstream h;
        h << r.id << " (lengths " << join(r.lengths) << "), N = " << r.coloring.size() << '\n';
        for (const auto & p : r.parts)
            h << "  part " << p.name << ": vertices " << p.first << ".." << p.first + p.size - 1 << '\n';
        bool undecided = false, failed = false;
        for (std::size_t i = 0; i < r.claims.size(); ++i) {
            const auto & c = r.claims[i];
            const auto & v = r.verdicts[i];
            h << "  colour " << c.color << ": ";
            switch (c.kind) {
            case ClaimKind::no_cycle_at_least: h << "no cycle of length >= " << c.bound; break;
            case ClaimKind::no_odd_cycle: h << "no odd cycle"; break;
            case ClaimKind::no_cycle: h << "no cycle"; break;
            }
            h << "  " << claim_status_name(v.status) << " (" << v.method << ")";
            if (c.informational)
                h << " [informational]";
            if (v.witness)
                h << " witness " << join(v.witness->vertices);
            h << '\n';
            if (! c.informational) {
                failed |= v.status == ClaimStatus::fails;
                undecided |= v.status == ClaimStatus::budget_exceeded;
            }
        }
        h << (r.all_hold() ? "all claims hold\n" : "not every claim holds\n");
        o.human = h.str();
        o.code = failed ? exit_code::failure : undecided ? exit_code::undecided : exit_code::ok;
        return o;
    }

    // ------------------------------------------------------------- verify

    struct VerifyArgs
    {
        std::string coloring_path, instance_path, targets;
    };

    auto do_verify(const VerifyArgs & a, const Common &) -> Outcome
    {
        Outcome o;
        o.config = {{"has_instance", ! a.instance_path.empty()}, {"targets", a.targets}};
        auto c = coloring_from_json(read_json_file(a.coloring_path));
        std::ostringstream h;
        h << "valid colouring: n = " << c.size() << ", k = " << c.colors() << ", " << c.host().edge_count()
          << " edges\n";
        Json classes = Json::array();
        for (int i = 1; i <= c.colors(); ++i) {
            auto g = color_class(c, i);
            auto comps = components(g);
            int largest = 0;
            for (const auto & s : comps)
                largest = std::max(largest, s.count());
            bool bip = bipartition(g).has_value();
            classes.push_back({{"color", i}, {"edges", g.edge_count()}, {"components", comps.size()},
                {"largest_component", largest}, {"bipartite", bip}});
            h << "  colour " << i << ": " << g.edge_count() << " edges, largest component " << largest
              << (bip ? ", bipartite" : ", not bipartite") << '\n';
        }
        o.result = {{"valid", true}, {"n", c.size()}, {"k", c.colors()}, {"classes", classes}};

        std::optional<std::vector<Target>> targets;
        if (! a.instance_path.empty()) {
            auto inst = instance_from_json(read_json_file(a.instance_path));
            bool fits = fits_instance(c, inst);
            o.result["fits_instance"] = fits;
            h << (fits ? "fits the instance\n" : "does not fit the instance\n");
            if (! fits)
                o.code = exit_code::failure;
            targets = inst.targets;
        }
        if (! a.targets.empty())
            targets = target_list(a.targets);
        if (targets) {
            if (targets->size() != static_cast<std::size_t>(c.colors()))
                throw ParseError("need one target per colour");
            bool avoids = avoids_all_targets(c, *targets);
            o.result["targets"] = target_names(*targets);
            o.result["avoids_all_targets"] = avoids;
            h << (avoids ? "avoids every target\n" : "contains a target\n");
            if (! avoids)
                o.code = exit_code::failure;
        }
        o.human = h.str();
        return o;
    }

    // ------------------------------------------------------------- cycles

    struct CyclesArgs
    {
        GraphInput input;
        int length = 0, erdos_gallai = 0;
        std::string parity = "any";
    };

    auto do_cycles(const CyclesArgs & a, const Common & common) -> Outcome
    {
        auto g = a.input.load();
        CycleBudget budget{common.cycle_budget};
        Outcome o;
        o.config = a.input.describe();
        o.config["cycle_budget"] = common.cycle_budget;
        std::ostringstream h;
        if (a.length > 0 && a.erdos_gallai > 0)
            throw ParseError("choose --length or --erdos-gallai, not both");
        if (a.erdos_gallai > 0) {
            o.config["mode"] = "erdos-gallai";
            o.config["m"] = a.erdos_gallai;
            auto c = erdos_gallai_cycle(g, a.erdos_gallai, budget);
            o.result = {{"mode", "erdos-gallai"}, {"length", c.length()}, {"cycle", cycle_to_json(c)}};
            h << "cycle of length " << c.length() << ": " << join(c.vertices) << '\n';
            o.human = h.str();
            return o;
        }
        CycleSearchResult r;
        if (a.length > 0) {
            o.config["mode"] = "length";
            o.config["length"] = a.length;
            r = has_cycle_of_length(g, a.length, budget);
        } else {
            Parity p = a.parity == "odd" ? Parity::odd : a.parity == "even" ? Parity::even : Parity::any;
            if (a.parity != "odd" && a.parity != "even" && a.parity != "any")
                throw ParseError("--parity must be any, odd or even");
            o.config["mode"] = "longest";
            o.config["parity"] = a.parity;
            r = longest_cycle(g, p, budget);
        }
        const char * status = r.status == SearchStatus::found ? "found"
            : r.status == SearchStatus::absent                ? "absent"
                                                              : "budget_exceeded";
        o.result = {{"mode", o.config["mode"]}, {"status", status}, {"expansions", r.expansions}};
        if (r.cycle) {
            o.result["length"] = r.cycle->length();
            o.result["cycle"] = cycle_to_json(*r.cycle);
            h << "cycle of length " << r.cycle->length() << ": " << join(r.cycle->vertices) << '\n';
        } else
            h << (r.status == SearchStatus::absent ? "no such cycle\n" : "budget exceeded, undecided\n");
        o.human = h.str();
        o.code = r.status == SearchStatus::budget_exceeded ? exit_code::undecided : exit_code::ok;
        return o;
    }

    // ----------------------------------------------------------- matching

    struct MatchingArgs
    {
        GraphInput input;
        bool nonbipartite = false;
        std::string walk;
    };

    auto do_matching(const MatchingArgs & a, const Common &) -> Outcome
    {
        auto g = a.input.load();
        Outcome o;
        o.config = a.input.describe();
        o.config["nonbipartite"] = a.nonbipartite;
        o.config["walk"] = a.walk;
        std::ostringstream h;
        auto m = maximum_matching(g);
        o.result["maximum_matching"] = {{"saturation", m.saturation()}, {"edges", matching_to_json(m)}};
        h << "maximum matching: " << m.edges.size() << " edges, saturating " << m.saturation() << '\n';
        try {
            auto best = best_component_matching(g, a.nonbipartite);
            o.result["best_component"] = {{"component", vertex_set_to_json(best.component)},
                {"saturation", best.matching.saturation()}, {"edges", matching_to_json(best.matching)}};
            h << "best " << (a.nonbipartite ? "non-bipartite " : "") << "component: " << best.component.count()
              << " vertices, matching saturating " << best.matching.saturation() << '\n';
            if (! a.walk.empty()) {
                if (a.walk != "odd" && a.walk != "even")
                    throw ParseError("--walk must be odd or even");
                auto parity = a.walk == "odd" ? WalkParity::odd : WalkParity::even;
                auto w = closed_walk_through_matching(g, best.matching, parity);
                bool ok = check_closed_walk(g, w, best.matching, parity, best.component);
                o.result["walk"] = {{"parity", a.walk}, {"length", w.length()}, {"vertices", w.vertices},
                    {"verified", ok}};
                h << a.walk << " closed walk of length " << w.length() << (ok ? " (verified)" : " (FAILED CHECK)")
                  << ": " << join(w.vertices) << '\n';
                if (! ok)
                    o.code = exit_code::failure;
            }
        }
        catch (const NoQualifyingComponent &) {
            o.result["best_component"] = nullptr;
            h << "no qualifying component\n";
        }
        o.human = h.str();
        return o;
    }

    // ---------------------------------------------------------- decompose

    struct DecomposeArgs
    {
        GraphInput input;
        int tutte = -1, scale = 0;
        std::string split_alpha;
    };

    auto do_decompose(const DecomposeArgs & a, const Common &) -> Outcome
    {
        auto g = a.input.load();
        Outcome o;
        o.config = a.input.describe();
        std::ostringstream h;
        if (a.tutte >= 0) {
            o.config["mode"] = "tutte";
            o.config["n_target"] = a.tutte;
            auto p = tutte_partition(g, a.tutte);
            bool ok = check_tutte_partition(g, p);
            o.result = {{"mode", "tutte"}, {"S", vertex_set_to_json(p.s)}, {"T", vertex_set_to_json(p.t)},
                {"U", vertex_set_to_json(p.u)}, {"verified", ok}};
            h << "S = {" << join(p.s.members()) << "}\nT = {" << join(p.t.members()) << "}\nU = {"
              << join(p.u.members()) << "}\n"
              << (ok ? "all partition conclusions hold\n" : "partition check FAILED\n");
            o.code = ok ? exit_code::ok : exit_code::failure;
        } else if (! a.split_alpha.empty()) {
            auto alpha = parse_rational(a.split_alpha);
            o.config["mode"] = "split";
            o.config["alpha"] = to_string(alpha);
            o.config["scale"] = a.scale;
            auto s = bipartite_split(g, alpha, a.scale);
            bool ok = check_bipartite_split(g, s);
            o.result = {{"mode", "split"}, {"bipartite_part", vertex_set_to_json(s.bipartite_part)},
                {"rest", vertex_set_to_json(s.rest)}, {"verified", ok}};
            h << "bipartite part {" << join(s.bipartite_part.members()) << "}\nrest {" << join(s.rest.members())
              << "}\n"
              << (ok ? "all split conclusions hold\n" : "split check FAILED\n");
            o.code = ok ? exit_code::ok : exit_code::failure;
        } else {
            o.config["mode"] = "gallai-edmonds";
            auto ge = gallai_edmonds(g);
            Json comps = Json::array();
            for (const auto & c : components(g))
                comps.push_back(vertex_set_to_json(c));
            o.result = {{"mode", "gallai-edmonds"}, {"matching_size", ge.matching_size},
                {"deficient", vertex_set_to_json(ge.deficient)}, {"barrier", vertex_set_to_json(ge.barrier)},
                {"rest", vertex_set_to_json(ge.rest)}, {"components", comps}, {"bipartite", is_bipartite(g, g.vertices())}};
            h << "matching size " << ge.matching_size << "\nD = {" << join(ge.deficient.members()) << "}\nA = {"
              << join(ge.barrier.members()) << "}\nC = {" << join(ge.rest.members()) << "}\n"
              << comps.size() << " components\n";
        }
        o.human = h.str();
        return o;
    }

    // -------------------------------------------------------------- bound

    struct BoundArgs
    {
        std::string parities, alphas, xi_args, hole_args;
        long n = 0;
    };

    auto do_bound(const BoundArgs & a, const Common &) -> Outcome
    {
        Outcome o;
        std::ostringstream h;
        int modes = ! a.parities.empty() + ! a.xi_args.empty() + ! a.hole_args.empty();
        if (modes != 1)
            throw ParseError("choose one of --parities/--alphas, --xi or --hole");
        if (! a.parities.empty()) {
            if (a.parities.size() != 3 || a.parities.find_first_not_of("eo") != std::string::npos)
                throw ParseError("--parities takes three letters from {e, o}, e.g. eeo");
            auto al = rational_list(a.alphas, 3, "--alphas");
            TargetTriple t;
            for (int i = 0; i < 3; ++i) {
                t.alphas[i] = al[i];
                t.parities[i] = a.parities[i] == 'e' ? CycleParity::even : CycleParity::odd;
            }
            t.n = std::max(1L, a.n);
            Json alphas = Json::array();
            for (const auto & x : al)
                alphas.push_back(to_string(x));
            o.config = {{"mode", "theorem"}, {"parities", a.parities}, {"alphas", alphas}, {"n", a.n}};
            if (a.n < 1) {
                // the coefficient does not depend on n; skip length validation
                for (int i = 0; i < 3; ++i)
                    if (t.alphas[i] <= 0)
                        throw OutOfRange("alphas must be positive");
                t.n = 1000000;
            }
            auto c = theorem_coefficient(t);
            o.result = {{"coefficient", to_string(c.value)}, {"decimal", to_decimal(c.value)},
                {"case", case_name(c.theorem_case)},
                {"permutation", {c.permutation[0], c.permutation[1], c.permutation[2]}}};
            h << to_string(c.value) << '\n';
            h << "coefficient " << to_decimal(c.value) << " (case " << case_name(c.theorem_case) << ", order "
              << c.permutation[0] + 1 << c.permutation[1] + 1 << c.permutation[2] + 1 << ")\n";
            if (a.n >= 1) {
                Json lengths = Json::array();
                for (int i = 0; i < 3; ++i)
                    lengths.push_back(t.target_length(i));
                Json sizes = Json::array();
                for (const auto & s : construction_sizes(t))
                    sizes.push_back({{"id", s.id}, {"n", s.n}});
                auto leading = ceil_of(c.value * a.n);
                o.result["target_lengths"] = lengths;
                o.result["leading_term"] = leading.str();
                o.result["construction_sizes"] = sizes;
                h << "n = " << a.n << ": target lengths " << lengths.dump() << ", ceil(c n) = " << leading << '\n';
                for (const auto & s : sizes)
                    h << "  " << s["id"].get<std::string>() << ": N = " << s["n"].get<long>() << '\n';
            }
        } else if (! a.xi_args.empty()) {
            auto v = rational_list(a.xi_args, 3, "--xi");
            auto x = xi(v[0], v[1], v[2]);
            o.config = {{"mode", "xi"}, {"args", {to_string(v[0]), to_string(v[1]), to_string(v[2])}}};
            o.result = {{"xi", to_string(x)}, {"decimal", to_decimal(x)}};
            h << to_string(x) << " (" << to_decimal(x) << ")\n";
        } else {
            auto v = rational_list(a.hole_args, 4, "--hole");
            HoleParams p{v[0], v[1], v[2], v[3]};
            if (a.n < 1)
                throw ParseError("--hole needs --n");
            long dwa = lemma_dwa_host_size(p, a.n), trzy = lemma_trzy_host_size(p, a.n);
            auto root = sqrt_enclosure(p.epsilon);
            o.config = {{"mode", "hole"},
                {"args", {to_string(v[0]), to_string(v[1]), to_string(v[2]), to_string(v[3])}}, {"n", a.n}};
            o.result = {{"dwa_host", dwa}, {"trzy_host", trzy}, {"sqrt_epsilon_exact", root.exact()},
                {"xi", to_string(xi(p.alpha, p.beta, p.nu))}};
            h << "two-colour host N = " << dwa << "\nnon-bipartite host N = " << trzy << '\n';
            if (! root.exact())
                h << "sqrt(epsilon) rounded outward\n";
        }
        o.human = h.str();
        return o;
    }

    // ------------------------------------------------------------- search

    struct SearchArgs
    {
        std::string instance_path, targets, holes, range, method = "auto", out_path;
        int n = 0, deleted_budget = 0, exact_cap = 13, split_depth = 10;
        bool no_symmetry = false;
        std::uint64_t steps = 200'000;
        int restarts = 8;
    };

    auto verdict_line(const ArrowVerdict & v) -> std::string
    {
        std::string s = std::string("arrows=") + arrows_name(v.arrows) + " (nodes " + std::to_string(v.stats.nodes)
            + ", prunes " + std::to_string(v.stats.prunes) + ")";
        if (! v.note.empty())
            s += " " + v.note;
        return s;
    }

    auto do_search(const SearchArgs & a, const Common & common) -> Outcome
    {
        ExhaustiveOptions opts;
        opts.node_budget = common.node_budget;
        opts.exact_cap = a.exact_cap;
        opts.symmetry = ! a.no_symmetry;
        opts.split_depth = a.split_depth;
        opts.threads = common.threads;
        if (a.method != "auto" && a.method != "exhaustive" && a.method != "randomized")
            throw ParseError("--method must be auto, exhaustive or randomized");

        Outcome o;
        std::ostringstream h;
        o.config = {{"method", a.method}, {"exact_cap", a.exact_cap}, {"symmetry", opts.symmetry},
            {"split_depth", a.split_depth}, {"node_budget", common.node_budget}};

        if (! a.range.empty()) {
            auto dots = a.range.find("..");
            if (dots == std::string::npos)
                throw ParseError("--range takes FROM..TO");
            int from = parse_int(a.range.substr(0, dots)), to = parse_int(a.range.substr(dots + 2));
            auto targets = target_list(a.targets);
            o.config["targets"] = target_names(targets);
            o.config["range"] = {from, to};
            auto r = ramsey_number_exact(targets, from, to, opts);
            Json verdicts = Json::array();
            for (const auto & [n, v] : r.verdicts) {
                auto entry = verdict_to_json(v, common.timing);
                entry["n"] = n;
                verdicts.push_back(entry);
                h << "N = " << n << ": " << verdict_line(v) << '\n';
            }
            o.result = {{"lower", r.lower}, {"verdicts", verdicts}};
            o.result["value"] = r.value ? Json(*r.value) : Json(nullptr);
            o.result["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
            if (r.value)
                h << "Ramsey number = " << *r.value << '\n';
            else
                h << "Ramsey number in [" << r.lower << ", " << (r.upper ? std::to_string(*r.upper) : "inf") << "]\n";
            o.human = h.str();
            o.code = r.value ? exit_code::ok : exit_code::undecided;
            return o;
        }

        ArrowInstance inst;
        std::optional<EdgeColoring> initial;
        if (! a.instance_path.empty()) {
            auto j = read_json_file(a.instance_path);
            inst = instance_from_json(j);
            if (instance_has_coloring(j)) {
                auto cj = j;
                cj["k"] = inst.targets.size();
                initial = coloring_from_json(cj);
            }
        } else {
            inst.n = a.n;
            inst.targets = target_list(a.targets);
            if (! a.holes.empty())
                inst.holes = hole_list(a.holes);
            inst.deleted_budget = a.deleted_budget;
        }
        validate(inst);
        o.config["instance"] = instance_to_json(inst);

        bool exhaustive = a.method == "exhaustive" || (a.method == "auto" && inst.n <= a.exact_cap);
        ArrowVerdict v;
        if (exhaustive) {
            bool all_matching = std::all_of(inst.targets.begin(), inst.targets.end(),
                [](const Target & t) { return t.kind == TargetKind::matching; });
            v = all_matching ? tau_check(inst, opts) : arrow_exhaustive(inst, opts);
        } else {
            AnnealSchedule s;
            s.steps = a.steps;
            s.restarts = a.restarts;
            o.config["steps"] = a.steps;
            o.config["restarts"] = a.restarts;
            v = arrow_randomized(inst, s, common.seed, common.threads, initial);
        }
        o.result = verdict_to_json(v, common.timing);
        o.result["method"] = exhaustive ? "exhaustive" : "randomized";
        h << "N = " << inst.n << ", targets";
        for (std::size_t i = 0; i < inst.targets.size(); ++i)
            h << ' ' << target_name(inst.targets[i]) << ':' << i + 1;
        h << '\n' << verdict_line(v) << '\n';
        if (common.timing)
            h << "wall time " << v.stats.seconds << " s\n";
        if (v.witness) {
            h << "witness colouring found";
            if (! a.out_path.empty()) {
                write_json_file(a.out_path, coloring_to_json(*v.witness));
                h << ", written to " << a.out_path;
            }
            h << '\n';
        }
        o.human = h.str();
        o.code = v.arrows == Arrows::unknown ? exit_code::undecided : exit_code::ok;
        return o;
    }

    // -------------------------------------------------------------- lemma

    struct LemmaArgs
    {
        std::string id = "dwa", alpha = "1", beta = "1", nu = "0", nu2 = "0", epsilon = "0.0081";
        int n = 40, n2 = 40, samples = 200, steps = 60;
    };

    auto do_lemma(const LemmaArgs & a, const Common & common) -> Outcome
    {
        LemmaParams p;
        p.id = parse_lemma(a.id);
        p.n = a.n;
        p.n2 = a.n2;
        p.alpha = parse_rational(a.alpha);
        p.beta = parse_rational(a.beta);
        p.nu = parse_rational(a.nu);
        p.nu2 = parse_rational(a.nu2);
        p.epsilon = parse_rational(a.epsilon);
        auto r = lemma_harness(p, a.samples, common.seed, common.threads, a.steps);

        Outcome o;
        o.config = {{"lemma", a.id}, {"n", a.n}, {"n2", a.n2}, {"alpha", to_string(p.alpha)},
            {"beta", to_string(p.beta)}, {"nu", to_string(p.nu)}, {"nu2", to_string(p.nu2)},
            {"epsilon", to_string(p.epsilon)}, {"samples", a.samples}, {"steps", a.steps}};
        o.result = lemma_report_to_json(r);
        std::ostringstream h;
        h << "lemma " << a.id << '\n';
        for (const auto & [k, v] : r.header)
            h << "  " << k << ": " << v << '\n';
        for (const auto & s : r.unmet_scale_conditions)
            h << "  not met at this scale: " << s << '\n';
        h << r.samples << " samples (" << r.uniform_samples << " uniform, " << r.adversarial_samples
          << " adversarial): " << r.passes << " pass, " << r.failures << " fail, " << r.rejected
          << " rejected on hypothesis re-check\n";
        h << "smallest margin " << r.min_slack << '\n';
        for (const auto & f : r.failure_list)
            h << "  sample " << f.sample << " (" << f.kind << "): " << f.detail
              << (f.hypotheses_hold ? "" : " [hypothesis broken]") << '\n';
        if (r.failures > 0)
            h << "note: the lemma holds for every n > n0, so a failure at this n is not a refutation\n";
        o.human = h.str();
        o.code = r.failures > 0 ? exit_code::failure : exit_code::ok;
        return o;
    }

} // namespace

auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Cycle Ramsey toolkit: colourings, cycles, matchings, bounds and arrowing search", "ramsey"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", tool_version);

    Common common;
    app.add_option("--seed", common.seed, "random seed (default fixed)");
    app.add_option("--threads", common.threads, "worker threads; never changes results")->check(CLI::Range(1, 256));
    app.add_option("--format", common.format, "human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_flag("--timing", common.timing, "include wall-clock times in reports");
    app.add_option("--node-budget", common.node_budget, "search node cap");
    app.add_option("--cycle-budget", common.cycle_budget, "cycle search expansion cap");

    std::function<Outcome()> action;
    std::string command;
    auto bind = [&](CLI::App * sub, auto & args, auto fn) {
        sub->callback([&, sub, fn] {
            command = sub->get_name();
            action = [&, fn] { return fn(args, common); };
        });
    };

    ConstructArgs ca;
    auto * construct = app.add_subcommand("construct", "build and verify a lower-bound colouring");
    construct->add_option("--odd-triple", ca.odd_triple, "four parts of size m-1, m odd");
    construct->add_option("--four-part", ca.four_part, "four parts of size m-1, any m >= 3");
    construct->add_option("--eeo-four-part", ca.eeo_four, "m1,m2 (even, m1 >= m2)");
    construct->add_option("--eeo-three-part", ca.eeo_three, "m1,m2,m3 (even, even, odd)");
    construct->add_option("--oee-four-part", ca.oee_four, "m1,m2 (even, odd)");
    construct->add_option("--out", ca.out_path, "write the colouring here");
    construct->add_option("--report", ca.report_path, "write the claim report here");
    bind(construct, ca, do_construct);

    VerifyArgs va;
    auto * verify = app.add_subcommand("verify", "validate a colouring, optionally against targets");
    verify->add_option("--coloring", va.coloring_path, "colouring file")->required();
    verify->add_option("--instance", va.instance_path, "instance file the colouring should fit");
    verify->add_option("--targets", va.targets, "targets such as C5:1,C5:2");
    bind(verify, va, do_verify);

    CyclesArgs cy;
    auto * cycles = app.add_subcommand("cycles", "exact cycle search");
    cy.input.add_to(cycles);
    cycles->add_option("--length", cy.length, "decide a cycle of exactly this length");
    cycles->add_option("--parity", cy.parity, "longest cycle parity: any, odd or even");
    cycles->add_option("--erdos-gallai", cy.erdos_gallai, "extract a cycle of length >= m");
    bind(cycles, cy, do_cycles);

    MatchingArgs ma;
    auto * matching = app.add_subcommand("matching", "maximum and per-component matchings");
    ma.input.add_to(matching);
    matching->add_flag("--nonbipartite", ma.nonbipartite, "restrict to non-bipartite components");
    matching->add_option("--walk", ma.walk, "closed walk parity through the best matching: odd or even");
    bind(matching, ma, do_matching);

    DecomposeArgs da;
    auto * decompose = app.add_subcommand("decompose", "Gallai-Edmonds, Tutte partition or bipartite split");
    da.input.add_to(decompose);
    decompose->add_option("--tutte", da.tutte, "partition for this saturation target");
    decompose->add_option("--split", da.split_alpha, "bipartite split with this alpha");
    decompose->add_option("--scale", da.scale, "scale n for --split");
    bind(decompose, da, do_decompose);

    BoundArgs ba;
    auto * bound = app.add_subcommand("bound", "exact bound formulas");
    bound->add_option("--parities", ba.parities, "three letters from {e,o}");
    bound->add_option("--alphas", ba.alphas, "three rationals");
    bound->add_option("--n", ba.n, "scale n for target lengths and sizes");
    bound->add_option("--xi", ba.xi_args, "alpha,beta,nu");
    bound->add_option("--hole", ba.hole_args, "alpha,beta,nu,epsilon (with --n)");
    bind(bound, ba, do_bound);

    SearchArgs sa;
    auto * search = app.add_subcommand("search", "decide whether a host arrows the targets");
    search->add_option("--instance", sa.instance_path, "instance file");
    search->add_option("--n", sa.n, "host size");
    search->add_option("--targets", sa.targets, "targets such as C3:1,C3:2 or M4,M4n");
    search->add_option("--holes", sa.holes, "hole sets, e.g. 0,1,2;3,4");
    search->add_option("--deleted-budget", sa.deleted_budget, "optional host deletions");
    search->add_option("--range", sa.range, "decide every N in FROM..TO");
    search->add_option("--method", sa.method, "auto, exhaustive or randomized");
    search->add_option("--exact-cap", sa.exact_cap, "largest N decided exhaustively");
    search->add_option("--split-depth", sa.split_depth, "edges fixed before parallel subtrees");
    search->add_flag("--no-symmetry", sa.no_symmetry, "disable symmetry pruning");
    search->add_option("--steps", sa.steps, "annealing steps per restart");
    search->add_option("--restarts", sa.restarts, "annealing restarts");
    search->add_option("--out", sa.out_path, "write a witness colouring here");
    bind(search, sa, do_search);

    LemmaArgs la;
    auto * lemma = app.add_subcommand("lemma", "property harness for the matching lemmas");
    lemma->add_option("--id", la.id, "l2, double, dwa, trzy or f1");
    lemma->add_option("--n", la.n, "|V1| (l2), N (double) or scale n");
    lemma->add_option("--n2", la.n2, "|V2| (l2)");
    lemma->add_option("--alpha", la.alpha, "alpha (alpha1 for f1)");
    lemma->add_option("--beta", la.beta, "beta (alpha2 for f1)");
    lemma->add_option("--nu", la.nu, "nu (nu1 for double)");
    lemma->add_option("--nu2", la.nu2, "nu2 (double)");
    lemma->add_option("--epsilon", la.epsilon, "epsilon");
    lemma->add_option("--samples", la.samples, "number of samples");
    lemma->add_option("--steps", la.steps, "local search steps per adversarial sample");
    bind(lemma, la, do_lemma);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::failure;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failure;
    }

    try {
        auto outcome = action();
        emit(command, common, outcome, out);
        return outcome.code;
    }
    catch (const BudgetExceeded & e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_code::undecided;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failure;
    }
}

} // namespace ramsey
