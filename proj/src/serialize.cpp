#include "minorcolor/serialize.hpp"

#include "minorcolor/io.hpp"

namespace minorcolor {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("field \"") + key + "\": " + e.what());
  }
}

Graph graph6_field(const Json& j, const char* key) {
  try {
    return from_graph6(get<std::string>(j, key));
  } catch (const ParseError& e) {
    throw SchemaError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json adjacency = Json::array();
  for (int v = 0; v < g.order(); ++v) adjacency.push_back(g.neighbors(v));
  return {{"n", g.order()}, {"adjacency", adjacency}};
}

Json to_json(const MinorModel& model) {
  return {{"pattern", to_graph6(model.pattern)}, {"branch_sets", model.branch_sets}};
}

MinorModel model_from_json(const Json& j) {
  MinorModel model;
  model.pattern = graph6_field(j, "pattern");
  model.branch_sets = get<std::vector<std::vector<int>>>(j, "branch_sets");
  return model;
}

Json to_json(const PathSystem& paths) {
  Json fans = Json::array();
  for (std::size_t i = 0; i < paths.apexes.size(); ++i) {
    fans.push_back({{"apex", paths.apexes[i]}, {"paths", paths.paths[i]}});
  }
  return {{"fans", fans}};
}

PathSystem paths_from_json(const Json& j) {
  PathSystem out;
  const Json& fans = field(j, "fans");
  if (!fans.is_array()) throw SchemaError("field \"fans\" is not an array");
  for (const auto& fan : fans) {
    out.apexes.push_back(get<int>(fan, "apex"));
    out.paths.push_back(get<std::vector<std::vector<int>>>(fan, "paths"));
  }
  return out;
}

Json to_json(const CockadeSpec& spec) {
  if (spec.leaf) return {{"leaf", to_graph6(*spec.leaf)}};
  return {{"sum",
           {{"k", spec.k},
            {"left", to_json(*spec.left)},
            {"right", to_json(*spec.right)},
            {"glue_left", spec.glue_left},
            {"glue_right", spec.glue_right}}}};
}

CockadeSpec cockade_from_json(const Json& j) {
  if (j.is_object() && j.contains("leaf")) return CockadeSpec::make_leaf(graph6_field(j, "leaf"));
  const Json& sum = field(j, "sum");
  try {
    return CockadeSpec::make_sum(get<int>(sum, "k"), cockade_from_json(field(sum, "left")),
                                 cockade_from_json(field(sum, "right")), get<std::vector<int>>(sum, "glue_left"),
                                 get<std::vector<int>>(sum, "glue_right"));
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const Certificate& cert, const Regime& regime) {
  Json j = {{"kind", cert.kind == Certificate::Kind::Coloring ? "coloring" : "minor"},
            {"regime", regime.name()},
            {"trace", cert.trace}};
  if (cert.kind == Certificate::Kind::Coloring) {
    j["coloring"] = cert.coloring;
  } else if (cert.model) {
    j["model"] = to_json(*cert.model);
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  auto kind = get<std::string>(j, "kind");
  if (kind == "coloring") {
    cert.kind = Certificate::Kind::Coloring;
    cert.coloring = get<std::vector<int>>(j, "coloring");
  } else if (kind == "minor") {
    cert.kind = Certificate::Kind::Minor;
    cert.model = model_from_json(field(j, "model"));
  } else {
    throw SchemaError("unknown certificate kind \"" + kind + "\"");
  }
  if (j.contains("trace")) cert.trace = get<std::vector<std::string>>(j, "trace");
  return cert;
}

Json to_json(const Alpha2Witness& w) {
  Json j = {{"kind", witness_kind_name(w.kind)}, {"route", w.route}};
  switch (w.kind) {
    case Alpha2Witness::Kind::MinorFound:
      j["model"] = to_json(*w.model);
      break;
    case Alpha2Witness::Kind::K5UK5:
      j["first"] = w.first;
      j["second"] = w.second;
      break;
    case Alpha2Witness::Kind::IsomorphicTo:
      j["named"] = w.named;
      j["isomorphism"] = w.isomorphism;
      break;
  }
  return j;
}

Alpha2Witness witness_from_json(const Json& j) {
  Alpha2Witness w;
  auto kind = get<std::string>(j, "kind");
  if (kind == "minor") {
    w.kind = Alpha2Witness::Kind::MinorFound;
    w.model = model_from_json(field(j, "model"));
  } else if (kind == "k5uk5") {
    w.kind = Alpha2Witness::Kind::K5UK5;
    w.first = get<std::vector<int>>(j, "first");
    w.second = get<std::vector<int>>(j, "second");
  } else if (kind == "isomorphic") {
    w.kind = Alpha2Witness::Kind::IsomorphicTo;
    w.named = get<std::string>(j, "named");
    w.isomorphism = get<std::vector<int>>(j, "isomorphism");
  } else {
    throw SchemaError("unknown witness kind \"" + kind + "\"");
  }
  if (j.contains("route")) w.route = get<std::string>(j, "route");
  return w;
}

Json with_schema(Json j) {
  j["schema"] = kSchema;
  return j;
}

void check_schema(const Json& j) {
  if (!j.is_object()) throw SchemaError("document is not a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) {
    throw SchemaError("unsupported schema " + j.at("schema").dump());
  }
}

}  // namespace minorcolor
