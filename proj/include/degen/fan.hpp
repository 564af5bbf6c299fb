#pragma once

#include <vector>

#include "degen/cone.hpp"
#include "degen/polyhedron.hpp"

namespace degen {

// A fan stored by its maximal cones.  Validity is checked on demand.
struct Fan {
  std::size_t ambient_rank = 0;
  std::vector<Cone> maximal_cones;

  // Canonical maximal cones, sorted and deduplicated.
  Fan canonical() const;
  // The cone generated by all maximal cones; equals the support when the support is convex.
  Cone support_hull() const;
  bool operator==(const Fan& other) const;
};

Fan normal_fan(const LatticePolyhedron& p);
// Pairwise intersections of maximal cones are faces of both.
bool is_valid_fan(const Fan& f);
// Every maximal cone lies in support with full dimension, and every facet of a maximal cone
// either lies on the boundary of support or is shared with another maximal cone.  Together
// with is_valid_fan this means the union of the cones is exactly support.
bool covers_support(const Fan& f, const Cone& support);
// Maximal-dimensional pairwise intersections.
Fan common_refinement(const Fan& a, const Fan& b);

}  // namespace degen
