#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "degen/cone.hpp"
#include "degen/linalg.hpp"

namespace degen {

// <normal, x> >= offset
struct Facet {
  IntVector normal;
  Rational offset;
  bool operator==(const Facet&) const = default;
};

// <normal, x> = value
struct AffineEquation {
  IntVector normal;
  Rational value;
  bool operator==(const AffineEquation&) const = default;
};

bool lex_less(const RatVector& a, const RatVector& b);

// conv(vertex_candidates) + recession.  Canonical data (true vertex set, canonical
// recession cone) and the facet representation are computed on first use and shared
// between copies.  A polyhedron without candidates is empty.
class LatticePolyhedron {
 public:
  struct Canonical {
    std::vector<RatVector> vertices;  // sorted; representatives modulo lineality
    Cone recession;
  };
  struct HRep {
    std::vector<Facet> facets;  // normals reduced modulo the equations, sorted
    std::vector<AffineEquation> equations;
  };

  LatticePolyhedron() : LatticePolyhedron(0, {}) {}
  LatticePolyhedron(std::size_t ambient_rank, std::vector<RatVector> points);
  LatticePolyhedron(std::size_t ambient_rank, std::vector<RatVector> points, Cone recession);

  static LatticePolyhedron empty(std::size_t ambient_rank) { return LatticePolyhedron(ambient_rank, {}); }
  static LatticePolyhedron from_inequalities(std::size_t ambient_rank, const std::vector<Facet>& facets,
                                             const std::vector<AffineEquation>& equations = {});
  // The hypercube [0,1]^k.
  static LatticePolyhedron cube(std::size_t k);

  std::size_t ambient_rank() const { return rank_; }
  bool is_empty() const { return candidates_.empty(); }
  const std::vector<RatVector>& vertex_candidates() const { return candidates_; }
  const Cone& recession_generators() const { return recession_; }

  const Canonical& canonical() const;
  const std::vector<RatVector>& vertices() const { return canonical().vertices; }
  const Cone& recession() const { return canonical().recession; }
  const HRep& hrep() const;
  const std::vector<Facet>& facets() const { return hrep().facets; }
  const std::vector<AffineEquation>& equations() const { return hrep().equations; }

  // Normal cone {u : <u, x - v> >= 0 for all x in P} at the i-th canonical vertex.
  const Cone& normal_cone(std::size_t vertex_index) const;

  bool is_bounded() const { return recession().rays().empty() && recession().lineality_basis().empty(); }
  std::size_t dimension() const;  // affine dimension; empty polyhedron reports 0
  bool contains(const RatVector& x) const;

  // Canonical vertex sets and recession cones agree.
  bool operator==(const LatticePolyhedron& other) const;

 private:
  struct Cache {
    std::once_flag canonical_once;
    Canonical canonical;
    std::once_flag hrep_once;
    HRep hrep;
    std::once_flag normal_once;
    std::vector<Cone> normal_cones;
  };
  friend LatticePolyhedron canonicalize(const LatticePolyhedron& p);
  friend LatticePolyhedron minkowski_sum(const LatticePolyhedron& p, const LatticePolyhedron& q);
  void compute_hull() const;

  std::size_t rank_ = 0;
  std::vector<RatVector> candidates_;
  Cone recession_;
  std::shared_ptr<Cache> cache_;
};

// Replaces the candidates by the vertex set; idempotent.
LatticePolyhedron canonicalize(const LatticePolyhedron& p);
LatticePolyhedron minkowski_sum(const LatticePolyhedron& p, const LatticePolyhedron& q);
LatticePolyhedron linear_image(const RatMatrix& f, const LatticePolyhedron& p);
// p ∩ {x : f x = target}, in the ambient coordinates of p.
LatticePolyhedron affine_slice(const LatticePolyhedron& p, const RatMatrix& f, const RatVector& target);
// x -> scale * m * (x - shift)
LatticePolyhedron affine_transform(const LatticePolyhedron& p, const Rational& scale, const RatMatrix& m,
                                   const RatVector& shift);
// Cone over p in rank + 1: generated by (v, 1) for vertices and (r, 0) for recession rays.
Cone cone_over(const LatticePolyhedron& p);
// Height-t slice of a cone in rank + 1, as a polyhedron in rank.
LatticePolyhedron height_slice(const Cone& c, const Rational& t);

// Per canonical vertex v: does {m - v : m in extra_monomials} ∪ {-v} ∪ (recession Hilbert
// candidates) generate every lattice point of (normal cone at v)^∨ of coordinate 1-norm at
// most degree_bound?  A bounded certificate only.
std::vector<bool> check_semigroup_generation(const LatticePolyhedron& p, const std::vector<IntVector>& extra_monomials,
                                             std::size_t degree_bound);

}  // namespace degen
