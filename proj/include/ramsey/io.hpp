#ifndef RAMSEY_IO_HPP
#define RAMSEY_IO_HPP

#include <ramsey/constructions.hpp>
#include <ramsey/graph.hpp>
#include <ramsey/lemma.hpp>
#include <ramsey/matching.hpp>
#include <ramsey/search.hpp>

#include <json.hpp>

#include <string>

namespace ramsey {

using Json = nlohmann::ordered_json;

/// {"n": 4, "edges": [[0,1], ...]}
auto graph_to_json(const Graph & g) -> Json;
auto graph_from_json(const Json & j) -> Graph;

/// {"n", "k", "holes": [[v...]...], "deleted": [[u,v]...], "edges": [[u,v,c]...]}.
/// Reading throws InvalidColoring unless the edge list covers exactly the
/// present pairs, each once, with colours in 1..k.
auto coloring_to_json(const EdgeColoring & c) -> Json;
auto coloring_from_json(const Json & j) -> EdgeColoring;

/// The colouring format with "targets": ["C3", "M4n", ...] and an optional
/// "deleted_budget"; "k" and "edges" may be omitted.
auto instance_to_json(const ArrowInstance & inst) -> Json;
auto instance_from_json(const Json & j) -> ArrowInstance;

/// Whether the instance file also carries a full colouring.
auto instance_has_coloring(const Json & j) -> bool;

auto vertex_set_to_json(const VertexSet & s) -> Json;
auto cycle_to_json(const CycleCertificate & c) -> Json;
auto matching_to_json(const MatchingCertificate & m) -> Json;

/// Report bodies. Wall-clock fields appear only when `timing` is set, so
/// reports stay byte-identical across runs by default.
auto verdict_to_json(const ArrowVerdict & v, bool timing) -> Json;
auto construction_to_json(const ConstructionReport & r) -> Json;
auto lemma_report_to_json(const LemmaReport & r) -> Json;

/// Throws ParseError on unreadable files or malformed JSON.
auto read_json_file(const std::string & path) -> Json;
auto write_json_file(const std::string & path, const Json & j) -> void;

} // namespace ramsey

#endif
