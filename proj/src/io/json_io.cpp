#include "arrkit/io/json_io.hpp"

#include <algorithm>

#include "arrkit/error.hpp"

namespace arrkit {

namespace {

Json vec_to_json(const Vec& v) {
  Json row = Json::array();
  for (const auto& s : v) row.push_back(s.to_string());
  return row;
}

Vec vec_from_json(const Json& row, std::size_t dim, const Field& f) {
  if (!row.is_array() || row.size() != dim) throw InvalidInput("form must be an array of " + std::to_string(dim) + " scalars");
  Vec v;
  for (const auto& s : row) {
    if (s.is_number_integer()) v.push_back(Scalar::integer(s.get<long>(), f));
    else if (s.is_string()) v.push_back(Scalar::parse(s.get<std::string>(), f));
    else throw InvalidInput("scalar must be a string or an integer");
  }
  return v;
}

Json exps(const Exponents& e) { return Json(e); }

std::size_t root_from_json(const RootSystem& rs, const Json& r) {
  if (r.is_number_unsigned()) {
    const auto i = r.get<std::size_t>();
    if (i >= rs.size()) throw InvalidInput("root index " + std::to_string(i) + " out of range");
    return i;
  }
  const auto c = r.get<std::vector<int>>();
  const auto i = rs.index_of(c);
  if (i == RootSystem::npos || c.size() != rs.rank())
    throw InvalidInput("not a positive root of " + rs.type().name() + ": " + r.dump());
  return i;
}

}  // namespace

Json field_to_json(const Field& f) {
  if (f.kind == Field::Kind::rational) return {{"kind", "rational"}};
  return {{"kind", "cyclotomic"}, {"order", f.order}};
}

Field field_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Field::rational();
  if (kind == "cyclotomic") return Field::cyclotomic(j.at("order").get<int>());
  throw InvalidInput("unknown field kind '" + kind + "'");
}

Json arrangement_to_json(const Arrangement& a) {
  Json hs = Json::array();
  for (const auto& n : a.normals()) hs.push_back(vec_to_json(n));
  return {{"dim", a.dim()}, {"field", field_to_json(a.field())}, {"hyperplanes", hs}};
}

Arrangement arrangement_from_json(const Json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    const Field f = j.contains("field") ? field_from_json(j.at("field")) : Field::rational();
    std::vector<Vec> forms;
    for (const auto& row : j.at("hyperplanes")) forms.push_back(vec_from_json(row, dim, f));
    for (const auto& v : forms)
      if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); }))
        throw InvalidInput("zero form in arrangement file");
    return Arrangement::from_forms(dim, f, forms);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad arrangement file: ") + e.what());
  }
}

Json flat_to_json(const Flat& x) {
  Json rows = Json::array();
  for (const auto& r : x.forms.rows()) rows.push_back(vec_to_json(r));
  Json hs = Json::array();
  for (std::size_t i = 0; i < x.contains.size(); ++i)
    if (x.contains[i]) hs.push_back(i);
  return {{"dim", x.dim()}, {"forms", rows}, {"hyperplanes", hs}};
}

Flat flat_from_json(const Arrangement& a, const Json& j) {
  const Json& rows = j.is_object() ? j.at("forms") : j;
  std::vector<Vec> forms;
  for (const auto& r : rows) forms.push_back(vec_from_json(r, a.dim(), a.field()));
  return make_flat(a, forms);
}

Json poly_to_json(const IntPoly& p) { return Json(p.coeffs()); }

Json certificate_to_json(const MatCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json st = {{"k", s.k},
               {"q", s.added},
               {"rank_ok", s.rank_ok},
               {"noncover_ok", s.noncover_ok},
               {"count_ok", s.count_ok},
               {"multiplicity_ok", s.multiplicity_ok},
               {"counts", s.counts},
               {"exponents_after", exps(s.exponents_after)}};
    if (!s.ok()) st["violated"] = {{"condition", s.violated}, {"detail", s.detail}};
    steps.push_back(std::move(st));
  }
  Json j = {{"partition", c.partition},
            {"steps", steps},
            {"exponents", exps(c.exponents)},
            {"valid", c.valid()},
            {"base", {{"size", c.base_size}, {"exponents", exps(c.base_exponents)}, {"provenance", c.base_provenance}}}};
  return j;
}

Json report_to_json(const AccuracyReport& r) {
  Json dims = Json::array();
  for (const auto& e : r.entries) {
    Json d = {{"d", e.d},
              {"witness", e.witness ? flat_to_json(*e.witness) : Json(nullptr)},
              {"exponents", exps(e.exponents)},
              {"evidence", e.evidence ? Json(to_string(*e.evidence)) : Json(nullptr)},
              {"source", e.source}};
    if (e.scanned_exhaustively) d["flats_scanned"] = e.flats_scanned;
    dims.push_back(std::move(d));
  }
  Json j = {{"verdict", to_string(r.verdict)}, {"mode", to_string(r.mode)}, {"exponents", exps(r.exponents)},
            {"dimensions", dims}};
  if (!r.provenance.empty()) j["provenance"] = r.provenance;
  if (!r.note.empty()) j["note"] = r.note;
  if (auto f = r.failing_dimension()) j["failing_dimension"] = *f;
  return j;
}

Json graph_to_json(const Graph& g) { return {{"n", g.vertex_count()}, {"edges", g.edges()}}; }

Graph graph_from_json(const Json& j) {
  try {
    return Graph(j.at("n").get<int>(), j.at("edges").get<std::vector<Graph::Edge>>());
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad graph file: ") + e.what());
  }
}

Ideal ideal_from_json(const RootSystem& rs, const Json& j) {
  try {
    if (j.contains("type") && RootSystemType::parse(j.at("type").get<std::string>()) != rs.type())
      throw InvalidInput("ideal file is for type " + j.at("type").get<std::string>() + ", not " + rs.type().name());
    std::vector<std::size_t> roots;
    const bool explicit_roots = j.contains("roots");
    for (const auto& r : j.at(explicit_roots ? "roots" : "generators")) roots.push_back(root_from_json(rs, r));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (explicit_roots && !is_ideal(rs, roots)) throw InvalidInput("listed roots are not closed downward");
    return ideal_from_generators(rs, roots);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad ideal file: ") + e.what());
  }
}

Json ideal_to_json(const RootSystem& rs, const Ideal& ideal) {
  Json roots = Json::array(), gens = Json::array();
  for (auto r : ideal.roots) roots.push_back(rs.root(r).simple_coeffs);
  for (auto g : ideal.generators) gens.push_back(rs.root(g).simple_coeffs);
  return {{"type", rs.type().name()}, {"roots", roots}, {"generators", gens}, {"max_height", ideal.max_height}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace arrkit
