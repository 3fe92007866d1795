#include "clusterdenom/report.hpp"

#include <limits>

#include "clusterdenom/errors.hpp"

namespace clusterdenom {

std::string version_string() {
  return std::string("clusterdenom ") + kToolVersion + " (report schema " + std::to_string(kReportSchemaVersion) + ")";
}

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json to_json(const ExchangeMatrix& b) {
  Json sym = Json::array();
  for (auto d : b.symmetrizer()) sym.push_back(d);
  return {{"n", b.rank()}, {"b", b.rows()}, {"symmetrizer", sym}};
}

ExchangeMatrix matrix_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("b")) throw InvalidMatrix("matrix JSON needs a \"b\" field");
    auto rows = j.at("b").get<std::vector<std::vector<ExchangeMatrix::Entry>>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != rows.size()) {
      throw InvalidMatrix("\"n\" does not match the number of rows");
    }
    if (j.contains("symmetrizer")) {
      return ExchangeMatrix::from_rows(rows, j.at("symmetrizer").get<std::vector<ExchangeMatrix::Entry>>());
    }
    return ExchangeMatrix::from_rows(rows);
  } catch (const Json::exception& e) {
    throw InvalidMatrix(std::string("malformed matrix JSON: ") + e.what());
  }
}

namespace {

const char* engine_name(Engine e) { return e == Engine::Laurent ? "laurent" : "recurrence"; }

Json dmatrix_json(const IntMatrix& d) {
  // list of columns (d-vectors)
  Json cols = Json::array();
  for (int c = 0; c < d.size(); ++c) cols.push_back(d.column(c));
  return cols;
}

}  // namespace

Json to_json(const Report& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"matrix", to_json(c.matrix)},
                       {"clusters", c.clusters},
                       {"variables", c.variables},
                       {"systems_checked", c.systems_checked},
                       {"min_abs_det", to_json(c.min_abs_det)},
                       {"completed", c.completed}});
  }
  Json singular = Json::array();
  for (const auto& s : r.singular) singular.push_back({{"class", s.class_index}, {"cluster", s.cluster}});
  Json feasible = Json::array();
  for (const auto& f : r.feasible) {
    Json m = Json::array(), n = Json::array();
    for (const auto& x : f.m) m.push_back(to_json(x));
    for (const auto& x : f.n) n.push_back(to_json(x));
    feasible.push_back({{"class", f.class_index}, {"s", f.s}, {"t", f.t}, {"l", f.l}, {"r", f.r}, {"m", m}, {"n", n}});
  }
  Json j = {{"schema_version", kReportSchemaVersion},
            {"tool", version_string()},
            {"input", to_json(r.input)},
            {"engine", engine_name(r.engine)},
            {"equivalence", "simultaneous-permutation"},
            {"class_count", r.class_count},
            {"classes", classes},
            {"min_abs_det", to_json(r.min_abs_det)},
            {"singular", singular},
            {"feasible", feasible},
            {"systems_checked", r.systems_checked},
            {"verdict", to_string(r.verdict)}};
  if (!r.budget_message.empty()) j["budget_message"] = r.budget_message;
  return j;
}

Json to_json(const ClusterPattern& p, const std::string& type_name) {
  Json dms = Json::array();
  for (const auto& d : dmatrices(p)) dms.push_back(dmatrix_json(d.d));
  Json dvs = Json::array();
  for (std::size_t v = 0; v < p.variable_count(); ++v) dvs.push_back(p.registry->dvector(static_cast<VariableId>(v)));
  return {{"schema_version", kReportSchemaVersion},
          {"type", type_name},
          {"matrix", to_json(p.initial)},
          {"clusters", p.cluster_count()},
          {"variables", p.variable_count()},
          {"dvectors", dvs},
          {"dmatrices", dms}};
}

namespace disc {

Json to_json(const TaggedArc& a) {
  switch (a.kind()) {
    case TaggedArc::Kind::Chord:
      return {{"kind", "chord"}, {"i", a.i()}, {"j", a.j()}, {"puncture_ccw", a.puncture_ccw()}};
    case TaggedArc::Kind::Radius:
      return {{"kind", "radius"}, {"v", a.v()}, {"tag", to_string(a.tag())}};
    case TaggedArc::Kind::Loop:
      return {{"kind", "loop"}, {"v", a.v()}};
  }
  return {};
}

TaggedArc arc_from_json(const Json& j, int n) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "chord") return TaggedArc::chord(n, j.at("i"), j.at("j"), j.at("puncture_ccw").get<bool>());
  if (kind == "radius") {
    const auto tag = j.at("tag").get<std::string>();
    if (tag != "plain" && tag != "notched") throw InvalidArgument("unknown tag " + tag);
    return TaggedArc::radius(n, j.at("v"), tag == "plain" ? Tag::Plain : Tag::Notched);
  }
  if (kind == "loop") return TaggedArc::loop(n, j.at("v"));
  throw InvalidArgument("unknown arc kind " + kind);
}

Json to_json(const ArcMultiset& m) {
  Json out = Json::array();
  for (const auto& [arc, k] : m) out.push_back({{"arc", to_json(arc)}, {"multiplicity", k}});
  return out;
}

}  // namespace disc

Json to_json(const reconstruct::InjectivityReport& r) {
  Json collisions = Json::array();
  for (const auto& c : r.collisions) {
    collisions.push_back(
        {{"triangulation", c.triangulation}, {"m", disc::to_json(c.m)}, {"n", disc::to_json(c.n)}, {"vector", c.vector}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"n", r.n},
          {"bound", r.bound},
          {"triangulations", r.triangulations},
          {"multisets", r.multisets},
          {"collisions", collisions}};
}

Json to_json(const reconstruct::CorrespondenceTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    entries.push_back(
        {{"arc", disc::to_json(e.arc)}, {"variable", e.variable}, {"int_vector", e.int_vector}, {"d_vector", e.d_vector}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"n", t.n},
          {"initial", to_json(t.initial)},
          {"orientations_tried", t.orientations_tried},
          {"triangulations", t.triangulations},
          {"flips_checked", t.flips_checked},
          {"entries", entries},
          {"multisets_checked", t.multisets.size()},
          {"failures", t.failures}};
}

}  // namespace clusterdenom
