#include "degen/fan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace degen {
namespace {

// The facets of c as cones, each cut out by one facet normal.
std::vector<Cone> facet_cones(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& f : c.facets()) {
    std::vector<IntVector> eqs = c.equations();
    eqs.push_back(f);
    out.push_back(canonical_form(Cone::from_inequalities(c.ambient_rank(), c.facets(), eqs)));
  }
  return out;
}

bool lies_in_hyperplane(const Cone& c, const IntVector& normal) {
  for (const auto& r : c.rays())
    if (dot(normal, r) != 0) return false;
  for (const auto& l : c.lineality_basis())
    if (dot(normal, l) != 0) return false;
  return true;
}

bool inside(const Cone& c, const Cone& outer) {
  for (const auto& r : c.rays())
    if (!outer.contains(r)) return false;
  for (const auto& l : c.lineality_basis()) {
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    if (!outer.contains(l) || !outer.contains(neg)) return false;
  }
  return true;
}

}  // namespace

Fan Fan::canonical() const {
  Fan out{ambient_rank, {}};
  for (const auto& c : maximal_cones) out.maximal_cones.push_back(canonical_form(c));
  std::sort(out.maximal_cones.begin(), out.maximal_cones.end());
  out.maximal_cones.erase(std::unique(out.maximal_cones.begin(), out.maximal_cones.end()), out.maximal_cones.end());
  return out;
}

Cone Fan::support_hull() const {
  Cone out = Cone::zero(ambient_rank);
  for (const auto& c : maximal_cones) out = cone_sum(out, c);
  return canonical_form(out);
}

bool Fan::operator==(const Fan& other) const {
  if (ambient_rank != other.ambient_rank) return false;
  return canonical().maximal_cones == other.canonical().maximal_cones;
}

Fan normal_fan(const LatticePolyhedron& p) {
  Fan f{p.ambient_rank(), {}};
  for (std::size_t i = 0; i < p.vertices().size(); ++i) f.maximal_cones.push_back(p.normal_cone(i));
  return f;
}

bool is_valid_fan(const Fan& f) {
  const auto& cs = f.maximal_cones;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      Cone meet = intersect(cs[i], cs[j]);
      if (!is_face(meet, cs[i]) || !is_face(meet, cs[j])) return false;
    }
  return true;
}

bool covers_support(const Fan& f, const Cone& support) {
  if (f.maximal_cones.empty()) return support.dimension() == 0;
  const std::size_t dim = support.dimension();
  std::map<Cone, int> shared;
  std::vector<std::vector<Cone>> facets;
  for (const auto& c : f.maximal_cones) {
    if (c.ambient_rank() != support.ambient_rank()) throw std::invalid_argument("covers_support: rank mismatch");
    if (c.dimension() != dim || !inside(c, support)) return false;
    facets.push_back(facet_cones(c));
    for (const auto& fc : facets.back()) ++shared[fc];
  }
  for (const auto& list : facets)
    for (const auto& fc : list) {
      bool boundary = std::any_of(support.facets().begin(), support.facets().end(),
                                  [&](const IntVector& g) { return lies_in_hyperplane(fc, g); });
      if (!boundary && shared[fc] != 2) return false;
    }
  return true;
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.ambient_rank != b.ambient_rank) throw std::invalid_argument("common_refinement: rank mismatch");
  std::vector<Cone> meets;
  std::size_t top = 0;
  for (const auto& x : a.maximal_cones)
    for (const auto& y : b.maximal_cones) {
      Cone m = canonical_form(intersect(x, y));
      top = std::max(top, m.dimension());
      meets.push_back(std::move(m));
    }
  Fan out{a.ambient_rank, {}};
  for (auto& m : meets)
    if (m.dimension() == top) out.maximal_cones.push_back(std::move(m));
  return out.canonical();
}

}  // namespace degen
