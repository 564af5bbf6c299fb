#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "degen/linalg.hpp"

namespace degen {

// Finitely generated rational polyhedral cone, stored by its generators.  The canonical
// V-representation (extreme rays modulo lineality, HNF lineality basis) and the
// H-representation (inward primitive facet normals plus a basis of equations) are
// computed on first use and shared by copies.
class Cone {
 public:
  struct Canonical {
    std::vector<IntVector> rays;       // reduced modulo lineality, primitive, sorted
    std::vector<IntVector> lineality;  // HNF basis of (lineality space) ∩ Z^d
    std::vector<IntVector> facets;     // reduced modulo the equations, primitive, sorted
    std::vector<IntVector> equations;  // HNF basis of span(cone)^⊥ ∩ Z^d
  };

  Cone() : Cone(0, std::vector<IntVector>{}) {}
  Cone(std::size_t ambient_rank, std::vector<IntVector> rays, std::vector<IntVector> lineality = {});

  static Cone from_columns(const RatMatrix& generators);
  static Cone from_inequalities(std::size_t ambient_rank, const std::vector<IntVector>& facets,
                                const std::vector<IntVector>& equations = {});
  static Cone zero(std::size_t ambient_rank) { return Cone(ambient_rank, std::vector<IntVector>{}); }
  static Cone whole_space(std::size_t ambient_rank);
  static Cone orthant(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  const std::vector<IntVector>& lineality_generators() const { return lineality_generators_; }

  const Canonical& canonical() const;
  const std::vector<IntVector>& rays() const { return canonical().rays; }
  const std::vector<IntVector>& lineality_basis() const { return canonical().lineality; }
  const std::vector<IntVector>& facets() const { return canonical().facets; }
  const std::vector<IntVector>& equations() const { return canonical().equations; }

  std::size_t dimension() const { return rank_ - equations().size(); }
  bool is_pointed() const { return lineality_basis().empty(); }
  bool is_full_dimensional() const { return equations().empty(); }
  bool contains(const IntVector& v) const;
  bool contains(const RatVector& v) const;
  // v lies in the relative interior: strictly positive on every facet.
  bool in_relative_interior(const IntVector& v) const;

  bool operator==(const Cone& other) const;
  bool operator<(const Cone& other) const;  // total order on canonical data

 private:
  struct Cache {
    std::once_flag once;
    Canonical data;
  };
  struct FromCanonical {};
  Cone(FromCanonical, std::size_t ambient_rank, Canonical canonical);
  friend Cone dual_cone(const Cone& c);
  friend Cone canonical_form(const Cone& c);

  std::size_t rank_ = 0;
  std::vector<IntVector> generators_;
  std::vector<IntVector> lineality_generators_;
  std::shared_ptr<Cache> cache_;
};

Cone dual_cone(const Cone& c);
Cone canonical_form(const Cone& c);
bool contains(const Cone& c, const IntVector& v);
Cone image_cone(const LatticeMap& f, const Cone& c);
Cone image_cone(const RatMatrix& f, const Cone& c);
// {z : K z ∈ c} for a matrix K with c.ambient_rank() rows.
Cone preimage_cone(const RatMatrix& k, const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone cone_sum(const Cone& a, const Cone& b);
bool is_smooth(const Cone& c);
// face ⊆ c and face is cut out of c by the facets of c vanishing on it.
bool is_face(const Cone& face, const Cone& c);

}  // namespace degen
