#include "degen/json_io.hpp"

#include <stdexcept>

namespace degen {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw std::invalid_argument(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

template <class T, class F>
std::vector<T> list_from_json(const Json& j, F&& parse) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  std::vector<T> out;
  for (const auto& e : j) out.push_back(parse(e));
  return out;
}

std::vector<IntVector> int_rows(const Json& j, std::size_t rank) {
  auto rows = list_from_json<IntVector>(j, int_vector_from_json);
  for (const auto& r : rows)
    if (r.size() != rank) throw std::invalid_argument("vector length differs from ambient_rank");
  return rows;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const RatMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(to_json(m.row(r)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const Cone& c) {
  Json rays = Json::array(), lin = Json::array(), facets = Json::array(), eqs = Json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  for (const auto& l : c.lineality_basis()) lin.push_back(to_json(l));
  for (const auto& f : c.facets()) facets.push_back(to_json(f));
  for (const auto& e : c.equations()) eqs.push_back(to_json(e));
  return {{"ambient_rank", c.ambient_rank()}, {"rays", rays}, {"lineality", lin}, {"facets", facets}, {"equations", eqs}};
}

Json to_json(const LatticePolyhedron& p, bool with_facets) {
  if (p.is_empty()) return {{"ambient_rank", p.ambient_rank()}, {"empty", true}};
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  Json out{{"ambient_rank", p.ambient_rank()}, {"vertices", vertices}, {"recession", to_json(p.recession())}};
  if (with_facets) {
    Json facets = Json::array(), eqs = Json::array();
    for (const auto& f : p.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
    for (const auto& e : p.equations()) eqs.push_back({{"normal", to_json(e.normal)}, {"value", to_json(e.value)}});
    out["facets"] = facets;
    out["equations"] = eqs;
  }
  return out;
}

Json to_json(const Fan& f) {
  Json cones = Json::array();
  for (const auto& c : f.canonical().maximal_cones) cones.push_back(to_json(c));
  return {{"ambient_rank", f.ambient_rank}, {"maximal_cones", cones}};
}

Json to_json(const FiniteAbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(d.get_si());
  return {{"invariant_factors", factors}};
}

Json to_json(const UnitValue& u) { return u.to_string(); }

Json to_json(const CycleConfiguration& c) {
  Json points = Json::array();
  for (const auto& p : c.points)
    points.push_back({{"component", p.component},
                      {"root", to_string(p.position.root())},
                      {"generic", p.position.generic()},
                      {"a1", p.a1},
                      {"mult", p.multiplicity}});
  return {{"n", c.n}, {"I_t", c.I_t}, {"points", points}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
}

IntVector int_vector_from_json(const Json& j) {
  return list_from_json<Integer>(j, [](const Json& e) {
    Rational q = rational_from_json(e);
    if (!is_integer(q)) throw std::invalid_argument("expected an integer entry");
    return Integer(q.get_num());
  });
}

RatVector rat_vector_from_json(const Json& j) { return list_from_json<Rational>(j, rational_from_json); }

RatMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = count_from_json(field(j, "rows"), "rows");
  const std::size_t cols = count_from_json(field(j, "cols"), "cols");
  const auto entries = list_from_json<RatVector>(field(j, "entries"), rat_vector_from_json);
  if (entries.size() != rows) throw std::invalid_argument("matrix row count mismatch");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entries[r][c];
  }
  return m;
}

Cone cone_from_json(const Json& j) {
  const std::size_t rank = count_from_json(field(j, "ambient_rank"), "ambient_rank");
  std::vector<IntVector> rays = int_rows(field(j, "rays"), rank);
  std::vector<IntVector> lin;
  if (j.contains("lineality")) lin = int_rows(j.at("lineality"), rank);
  return Cone(rank, std::move(rays), std::move(lin));
}

LatticePolyhedron polyhedron_from_json(const Json& j) {
  const std::size_t rank = count_from_json(field(j, "ambient_rank"), "ambient_rank");
  if (j.value("empty", false)) return LatticePolyhedron::empty(rank);
  auto vertices = list_from_json<RatVector>(field(j, "vertices"), rat_vector_from_json);
  for (const auto& v : vertices)
    if (v.size() != rank) throw std::invalid_argument("vertex length differs from ambient_rank");
  Cone recession = j.contains("recession") ? cone_from_json(j.at("recession")) : Cone::zero(rank);
  if (recession.ambient_rank() != rank) throw std::invalid_argument("recession cone rank mismatch");
  return LatticePolyhedron(rank, std::move(vertices), std::move(recession));
}

CycleConfiguration configuration_from_json(const Json& j) {
  CycleConfiguration c;
  c.n = count_from_json(field(j, "n"), "n");
  c.I_t = list_from_json<std::size_t>(field(j, "I_t"), [](const Json& e) { return count_from_json(e, "I_t entry"); });
  c.points = list_from_json<CyclePoint>(field(j, "points"), [](const Json& e) {
    std::vector<long> generic;
    if (e.contains("generic"))
      generic = list_from_json<long>(e.at("generic"), [](const Json& g) {
        if (!g.is_number_integer()) throw std::invalid_argument("generic exponents must be integers");
        return g.get<long>();
      });
    CyclePoint p;
    p.component = count_from_json(field(e, "component"), "component");
    p.position = UnitValue(rational_from_json(field(e, "root")), std::move(generic));
    p.a1 = e.contains("a1") ? e.at("a1").get<std::string>() : std::string();
    p.multiplicity = e.contains("mult") ? count_from_json(e.at("mult"), "mult") : 1;
    return p;
  });
  return c;
}

}  // namespace degen
