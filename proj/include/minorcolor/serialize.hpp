#ifndef MINORCOLOR_SERIALIZE_HPP
#define MINORCOLOR_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "minorcolor/cockade.hpp"
#include "minorcolor/colorer.hpp"
#include "minorcolor/kempe.hpp"
#include "minorcolor/minor.hpp"
#include "minorcolor/structure.hpp"

namespace minorcolor {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "minorcolor/1";

/// JSON that does not match the expected document shape.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": int, "adjacency": [[int]]}
Json graph_to_json(const Graph& g);

/// {"pattern": graph6, "branch_sets": [[int]]}
Json to_json(const MinorModel& model);
MinorModel model_from_json(const Json& j);

/// {"fans": [{"apex": int, "paths": [[int]]}]}
Json to_json(const PathSystem& paths);
PathSystem paths_from_json(const Json& j);

/// {"leaf": graph6} or {"sum": {"k", "left", "right", "glue_left", "glue_right"}}
Json to_json(const CockadeSpec& spec);
CockadeSpec cockade_from_json(const Json& j);

/// {"kind": "coloring"|"minor", "coloring"?, "model"?, "trace", "regime"}
Json to_json(const Certificate& cert, const Regime& regime);
Certificate certificate_from_json(const Json& j);

/// {"kind": "minor"|"k5uk5"|"isomorphic", ...} mirroring Alpha2Witness.
Json to_json(const Alpha2Witness& witness);
Alpha2Witness witness_from_json(const Json& j);

/// Top-level documents carry "schema": "minorcolor/1"; a different value is
/// rejected, a missing one accepted.
Json with_schema(Json j);
void check_schema(const Json& j);

}  // namespace minorcolor

#endif  // MINORCOLOR_SERIALIZE_HPP
