#ifndef GCA_CLI_JSON_IO_HPP
#define GCA_CLI_JSON_IO_HPP

#include <json.hpp>

#include "gca/cover.hpp"
#include "gca/fock.hpp"
#include "gca/invariants.hpp"
#include "gca/structure.hpp"

namespace gca::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g, const VertexSet& s);
Json to_json(const Graph& g, const Invariant& inv);
Json to_json(const Graph& g, const Cycle& c);
Json to_json(const Verdict& v);
Json to_json(const Graph& g, const StructureReport& r);
Json to_json(const Graph& g, const QuotientData& q);
Json to_json(const Graph& g, const RelationReport& r);
Json to_json(const Graph& g, const StandardForm& sf);

// Inverse of to_json for invariants: {"N": [...], "F": {"u": ["e#0", ...]}}.
Invariant invariant_from_json(const Graph& g, const Json& j);

}  // namespace gca::cli

#endif
