#include "degen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "degen/degeneration.hpp"
#include "degen/fan.hpp"
#include "degen/json_io.hpp"
#include "degen/symmetric.hpp"
#include "degen/toric_git.hpp"

namespace degen {
namespace {

struct Outcome {
  bool pass;
  Json witness;
};

std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) I.push_back(i + 1);
    out.push_back(std::move(I));
  }
  return out;
}

std::vector<RatVector> sorted_points(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Json point_list(const std::vector<RatVector>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

Outcome conical_part(std::size_t n) {
  const auto b = build_bundle(n);
  const Cone image = image_cone(b.pi, b.sigmaW);
  const Cone expected = sigma_small(n);
  const bool two_ways = b.sigmaW == sigmaW_from_rays(n);
  Json w{{"image", to_json(image)}, {"sigma_n", to_json(expected)}, {"sigmaW_descriptions_agree", two_ways}};
  return {two_ways && image == expected, w};
}

Outcome pb_vertices(std::size_t n) {
  const auto b = build_bundle(n);
  const LatticePolyhedron pb = polytope_b(b);
  std::vector<RatVector> projections;
  bool tails_ok = true;
  Json bad_tails = Json::array();
  for (const auto& v : pb.vertices()) {
    projections.emplace_back(v.begin(), v.begin() + static_cast<long>(n));
    RatVector tail(v.begin() + static_cast<long>(n), v.end());
    if (tail != b.tail) {
      tails_ok = false;
      bad_tails.push_back(to_json(v));
    }
  }
  projections = sorted_points(projections);
  std::vector<RatVector> orbit;
  RatVector u = b.u_vector;
  std::sort(u.begin(), u.end());
  do orbit.push_back(u);
  while (std::next_permutation(u.begin(), u.end()));
  orbit = sorted_points(orbit);

  bool cuts_ok = true;
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational level = Rational(static_cast<long>(i * n)) / static_cast<long>(n + 1);
    const LatticePolyhedron cut = hyperplane_cut(n, i);
    for (const auto& v : cut.vertices()) {
      Rational sum = 0;
      for (const auto& x : v) sum += x;
      cuts_ok = cuts_ok && sum == level;
    }
  }
  Json w{{"u", to_json(b.u_vector)}, {"tail", to_json(b.tail)}, {"projected_vertices", point_list(projections)},
         {"vertex_count", pb.vertices().size()}, {"hyperplane_constants_hold", cuts_ok}};
  if (!tails_ok) w["vertices_with_wrong_tail"] = bad_tails;
  if (projections != orbit) w["expected_projection"] = point_list(orbit);
  return {tails_ok && cuts_ok && projections == orbit, w};
}

Outcome quotient_theorem(std::size_t n) {
  const auto b = build_bundle(n);
  const auto model = build_symmetric(n);
  const QuotientCoordinates coords = quotient_coordinates(ghh_linearization_W(b));
  Json w;

  // The basis change Q' is stated for the kernel basis e_1, .., e_n, (0; 1, .., 1).
  RatMatrix expected_basis(2 * n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) expected_basis(i, i) = 1;
  for (std::size_t r = 0; r <= n; ++r) expected_basis(n + r, n) = 1;
  if (!(coords.basis == expected_basis)) {
    w["kernel_basis"] = to_json(coords.basis);
    return {false, w};
  }

  RatVector m_u(b.u_vector);
  m_u.insert(m_u.end(), b.tail.begin(), b.tail.end());
  const Rational scale = Rational(static_cast<long>(n + 1)) / static_cast<long>(n + 2);
  const RatMatrix map = b.Qprime * coords.to_local;
  std::vector<RatVector> image;
  const LatticePolyhedron pb = polytope_b(b);
  for (const auto& v : pb.vertices()) {
    RatVector d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i] - m_u[i];
    RatVector x = map * d;
    for (auto& e : x) e *= scale;
    image.push_back(std::move(x));
  }
  image = sorted_points(image);
  std::vector<RatVector> expected;
  for (const auto& s : all_permutations(n)) {
    RatVector iv(n + 1);
    const RatVector vs = permutahedron_vertex(s);
    std::copy(vs.begin(), vs.end(), iv.begin() + 1);
    expected.push_back(std::move(iv));
  }
  expected = sorted_points(expected);

  const Cone local_recession = preimage_cone(coords.basis, b.sigmaW_dual);
  const Cone mapped = image_cone(b.Qprime, local_recession);
  const Cone target = dual_cone(model.sigma_cone);
  const bool vertices_ok = image == expected;
  const bool cone_ok = mapped == target;
  w["scale"] = to_json(scale);
  w["Qprime"] = to_json(b.Qprime);
  w["transformed_vertices"] = point_list(image);
  w["mapped_recession"] = to_json(mapped);
  if (!vertices_ok) w["expected_vertices"] = point_list(expected);
  if (!cone_ok) w["expected_recession"] = to_json(target);
  return {vertices_ok && cone_ok, w};
}

Outcome normal_fan_check(std::size_t n) {
  const auto model = build_symmetric(n);
  const Fan fan = normal_fan(model.tildeP_n).canonical();
  const Fan& expected = model.Delta_fan;
  // Normal cone at ṽ_e, the lift of v_e = 0.
  bool identity_cone_ok = false;
  const auto& verts = model.tildeP_n.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (is_zero(verts[i])) identity_cone_ok = model.tildeP_n.normal_cone(i) == model.delta_n;
  Json w{{"maximal_cone_count", fan.maximal_cones.size()}, {"normal_cone_at_identity_is_delta", identity_cone_ok}};
  if (!(fan == expected)) {
    Json extra = Json::array(), missing = Json::array();
    for (const auto& c : fan.maximal_cones)
      if (std::find(expected.maximal_cones.begin(), expected.maximal_cones.end(), c) == expected.maximal_cones.end())
        extra.push_back(to_json(c));
    for (const auto& c : expected.maximal_cones)
      if (std::find(fan.maximal_cones.begin(), fan.maximal_cones.end(), c) == fan.maximal_cones.end())
        missing.push_back(to_json(c));
    w["cones_not_in_Delta"] = extra;
    w["cones_of_Delta_missing"] = missing;
  }
  return {identity_cone_ok && fan == expected, w};
}

Outcome unstable_locus(std::size_t n) {
  const auto b = build_bundle(n);
  const LatticePolyhedron pb = polytope_b(b);
  bool ok = b.sigmaW == sigmaW_from_rays(n);
  Json rays = Json::array();
  for (const auto& I : subsets(n))
    for (std::size_t j = 0; j <= n; ++j) {
      const IntVector v = v_ray(n, I, j);
      const Rational d = support_constant(b.tildeP_W, v);
      const RayDatum r = ray_margins(pb, {RayConstant{v, d}}).front();
      const bool row_ok = d == closed_form_d(n, I.size(), j) && r.margin == closed_form_margin(n, I.size(), j) &&
                          r.margin >= 0 && (r.margin == 0) == (j == I.size()) && r.unstable == (j != I.size());
      ok = ok && row_ok;
      Json row{{"I", I}, {"j", j}, {"d", to_json(d)}, {"margin", to_json(r.margin)}, {"unstable", r.unstable}};
      if (!row_ok) row["matches_closed_form"] = false;
      rays.push_back(std::move(row));
    }
  return {ok, Json{{"rays", rays}}};
}

Outcome base_recovery(std::size_t n) {
  const auto b = build_bundle(n);
  const Linearization lin = ghh_linearization_X(b);
  const QuotientPolyhedron q = quotient_polyhedron(b.tildeP_X, lin);
  const SplitQuotient split = split_quotient(b.tildeP_X, lin);
  Json w;
  if (q.local.is_empty()) return {false, Json{{"empty", true}}};
  const Cone& rec = q.local.recession();
  const bool one_point = q.local.vertices().size() == 1 && split.polytopal.vertices().size() == 1;
  const bool plane_chart = q.local.ambient_rank() == 2 && rec.is_pointed() && rec.is_full_dimensional() &&
                           rec.rays().size() == 2 && is_smooth(rec);
  // Lifted rays should be x = (-1; 1, .., 1) and y = (1; 0, .., 0).
  std::set<IntVector> lifted;
  for (const auto& r : rec.rays()) lifted.insert(primitive_integer(q.basis * r));
  IntVector x(n + 2, Integer(1)), y(n + 2);
  x[0] = -1;
  y[0] = 1;
  const bool rays_are_xy = lifted == std::set<IntVector>{x, y};
  Json lifted_json = Json::array();
  for (const auto& r : lifted) lifted_json.push_back(to_json(r));
  w["ambient_vertex"] = to_json(q.ambient.vertices().front());
  w["local_recession"] = to_json(rec);
  w["lifted_rays"] = lifted_json;
  w["one_point_polytopal_part"] = one_point;
  return {one_point && plane_chart && rays_are_xy, w};
}

Outcome fan_smooth_small(std::size_t n) {
  const auto model = build_symmetric(n);
  const Fan& fan = model.Delta_fan;
  bool smooth = true;
  Json interior_rays = Json::array(), singular = Json::array();
  std::set<IntVector> rays;
  for (const auto& c : fan.maximal_cones) {
    if (!is_smooth(c)) {
      smooth = false;
      singular.push_back(to_json(c));
    }
    rays.insert(c.rays().begin(), c.rays().end());
  }
  for (const auto& r : rays)
    if (model.sigma_cone.in_relative_interior(r)) interior_rays.push_back(to_json(r));
  const bool valid = is_valid_fan(fan);
  const bool covers = covers_support(fan, model.sigma_cone);
  Json w{{"maximal_cone_count", fan.maximal_cones.size()}, {"ray_count", rays.size()}, {"valid_fan", valid},
         {"support_is_sigma_n", covers}};
  if (!smooth) w["singular_cones"] = singular;
  if (!interior_rays.empty()) w["rays_in_relative_interior"] = interior_rays;
  return {smooth && interior_rays.empty() && valid && covers, w};
}

struct CheckEntry {
  std::size_t min_n, max_n;
  std::function<Outcome(std::size_t)> run;
};

const std::map<std::string, CheckEntry>& registry() {
  static const std::map<std::string, CheckEntry> table{
      {"conical_part", {1, 5, conical_part}},       {"pb_vertices", {1, 5, pb_vertices}},
      {"quotient_theorem", {2, 5, quotient_theorem}}, {"normal_fan", {2, 5, normal_fan_check}},
      {"unstable_locus", {1, 5, unstable_locus}},   {"base_recovery", {1, 5, base_recovery}},
      {"fan_smooth_small", {2, 5, fan_smooth_small}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"conical_part",   "pb_vertices",   "quotient_theorem", "normal_fan",
                                              "unstable_locus", "base_recovery", "fan_smooth_small"};
  return names;
}

std::pair<std::size_t, std::size_t> check_range(const std::string& check) {
  auto it = registry().find(check);
  if (it == registry().end()) throw std::invalid_argument("unknown check: " + check);
  return {it->second.min_n, it->second.max_n};
}

VerificationReport verify(std::size_t n, const std::string& check) {
  const auto [lo, hi] = check_range(check);
  if (n < lo || n > hi)
    throw std::invalid_argument(check + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep{check, n, "error", nullptr, 0};
  try {
    Outcome o = registry().at(check).run(n);
    rep.status = o.pass ? "pass" : "fail";
    rep.witness = std::move(o.witness);
  } catch (const std::exception& e) {
    rep.witness = Json{{"error", e.what()}};
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace degen
