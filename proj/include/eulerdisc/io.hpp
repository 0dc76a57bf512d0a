#pragma once
//
// JSON ingestion of graphs, families and matrices, and report serialization.
//

#include "eulerdisc/combi.hpp"
#include "eulerdisc/cosmo.hpp"
#include "eulerdisc/discriminant.hpp"
#include "eulerdisc/family.hpp"
#include "eulerdisc/symcore.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace eulerdisc::io {

using Json = nlohmann::json;

/// Parse JSON text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

/// {"left": 3 | [0,1,2], "right": 4 | [3,4,5,6], "edges": [[i,j],...]}
combi::PatternGraph pattern_from_json(const Json& j);
/// {"vertices": n, "edges": [[u,v] | [u,v,"id"], ...]}
combi::CosmoGraph cosmo_from_json(const Json& j);
/// {"k": k, "params": [...], "entries": [[expr,...],...], "substitute": {"w3": "-w1-w2"}}
ParamFamily family_from_json(const Json& j);
/// Rows of integers or "p/q" strings.
RationalMatrix matrix_from_json(const Json& j);

std::string to_string(const combi::VertexSet& s);

Json to_json(const symcore::FactoredPolynomial& f);
Json to_json(const discriminant::PadReport& r);
Json to_json(const discriminant::DiscriminantReport& r);
Json to_json(const symcore::RationalFunction& r);
Json to_json(const cosmo::LinearForm& f, const combi::CosmoGraph& g);

/// Text lines followed by the structured block, keys sorted.
std::string render(const std::string& text, const Json& structured);

} // namespace eulerdisc::io
