#include "degen/cone.hpp"

#include <algorithm>
#include <stdexcept>

#include "degen/double_description.hpp"

namespace degen {
namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<IntVector> normalized(std::size_t rank, std::vector<IntVector> vs) {
  std::vector<IntVector> out;
  out.reserve(vs.size());
  for (auto& v : vs) {
    if (v.size() != rank) throw std::invalid_argument("cone generator has wrong dimension");
    if (is_zero(v)) continue;
    out.push_back(primitive(std::move(v)));
  }
  return out;
}

RowEchelon span_echelon(const std::vector<IntVector>& basis, std::size_t rank) {
  return reduced_row_echelon(RatMatrix::from_int_rows(basis, rank));
}

std::vector<IntVector> reduce_all(const std::vector<IntVector>& vs, const std::vector<IntVector>& basis,
                                  std::size_t rank) {
  std::vector<IntVector> out;
  if (basis.empty()) {
    out = vs;
  } else {
    RowEchelon e = span_echelon(basis, rank);
    for (const auto& v : vs) {
      RatVector r = reduce_modulo(to_rational(v), e);
      if (!is_zero(r)) out.push_back(primitive_integer(r));
    }
  }
  sort_unique(out);
  return out;
}

Cone::Canonical compute_canonical(std::size_t rank, const std::vector<IntVector>& gens,
                                  const std::vector<IntVector>& lin) {
  Cone::Canonical c;
  if (rank == 0) return c;
  ConeGenerators dual = solve_homogeneous_system(rank, gens, lin);
  c.equations = hnf_rows(dual.lineality, rank);
  c.facets = reduce_all(dual.rays, c.equations, rank);
  ConeGenerators primal = solve_homogeneous_system(rank, c.facets, c.equations);
  c.lineality = hnf_rows(primal.lineality, rank);
  c.rays = reduce_all(primal.rays, c.lineality, rank);
  return c;
}

IntVector scaled_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  for (const auto& x : v) out.emplace_back(x.get_num() * (l / x.get_den()));
  return out;
}

}  // namespace

Cone::Cone(std::size_t ambient_rank, std::vector<IntVector> rays, std::vector<IntVector> lineality)
    : rank_(ambient_rank),
      generators_(normalized(ambient_rank, std::move(rays))),
      lineality_generators_(normalized(ambient_rank, std::move(lineality))),
      cache_(std::make_shared<Cache>()) {}

Cone::Cone(FromCanonical, std::size_t ambient_rank, Canonical canonical)
    : rank_(ambient_rank),
      generators_(canonical.rays),
      lineality_generators_(canonical.lineality),
      cache_(std::make_shared<Cache>()) {
  std::call_once(cache_->once, [&] { cache_->data = std::move(canonical); });
}

Cone Cone::from_columns(const RatMatrix& generators) {
  return Cone(generators.rows(), generators.integer_columns());
}

Cone Cone::from_inequalities(std::size_t ambient_rank, const std::vector<IntVector>& facets,
                             const std::vector<IntVector>& equations) {
  ConeGenerators g = solve_homogeneous_system(ambient_rank, facets, equations);
  return Cone(ambient_rank, std::move(g.rays), std::move(g.lineality));
}

Cone Cone::whole_space(std::size_t ambient_rank) {
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    IntVector e(ambient_rank);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return Cone(ambient_rank, {}, basis);
}

Cone Cone::orthant(std::size_t ambient_rank) {
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    IntVector e(ambient_rank);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return Cone(ambient_rank, basis);
}

const Cone::Canonical& Cone::canonical() const {
  std::call_once(cache_->once, [this] { cache_->data = compute_canonical(rank_, generators_, lineality_generators_); });
  return cache_->data;
}

bool Cone::contains(const IntVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& e : equations())
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets())
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::contains(const RatVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("contains: dimension mismatch");
  return contains(scaled_integer(v));
}

bool Cone::in_relative_interior(const IntVector& v) const {
  if (!contains(v)) return false;
  for (const auto& f : facets())
    if (dot(f, v) <= 0) return false;
  return true;
}

bool Cone::operator==(const Cone& other) const {
  return rank_ == other.rank_ && rays() == other.rays() && lineality_basis() == other.lineality_basis();
}

bool Cone::operator<(const Cone& other) const {
  if (rank_ != other.rank_) return rank_ < other.rank_;
  if (lineality_basis() != other.lineality_basis())
    return std::lexicographical_compare(lineality_basis().begin(), lineality_basis().end(),
                                        other.lineality_basis().begin(), other.lineality_basis().end(), lex_less);
  return std::lexicographical_compare(rays().begin(), rays().end(), other.rays().begin(), other.rays().end(),
                                      lex_less);
}

Cone dual_cone(const Cone& c) {
  const auto& k = c.canonical();
  return Cone(Cone::FromCanonical{}, c.ambient_rank(), Cone::Canonical{k.facets, k.equations, k.rays, k.lineality});
}

Cone canonical_form(const Cone& c) { return Cone(Cone::FromCanonical{}, c.ambient_rank(), c.canonical()); }

bool contains(const Cone& c, const IntVector& v) { return c.contains(v); }

Cone image_cone(const LatticeMap& f, const Cone& c) {
  if (f.source_rank() != c.ambient_rank()) throw std::invalid_argument("image_cone: dimension mismatch");
  std::vector<IntVector> rays, lin;
  for (const auto& g : c.generators()) rays.push_back(f.apply(g));
  for (const auto& l : c.lineality_generators()) lin.push_back(f.apply(l));
  return Cone(f.target_rank(), std::move(rays), std::move(lin));
}

Cone image_cone(const RatMatrix& f, const Cone& c) {
  if (f.cols() != c.ambient_rank()) throw std::invalid_argument("image_cone: dimension mismatch");
  std::vector<IntVector> rays, lin;
  for (const auto& g : c.generators()) rays.push_back(primitive_integer(f * g));
  for (const auto& l : c.lineality_generators()) lin.push_back(primitive_integer(f * l));
  return Cone(f.rows(), std::move(rays), std::move(lin));
}

Cone preimage_cone(const RatMatrix& k, const Cone& c) {
  if (k.rows() != c.ambient_rank()) throw std::invalid_argument("preimage_cone: dimension mismatch");
  RatMatrix kt = k.transpose();
  std::vector<IntVector> ineqs, eqs;
  for (const auto& f : c.facets()) ineqs.push_back(primitive_integer(kt * f));
  for (const auto& e : c.equations()) eqs.push_back(primitive_integer(kt * e));
  std::vector<IntVector> nonzero_eqs;
  for (auto& e : eqs)
    if (!is_zero(e)) nonzero_eqs.push_back(std::move(e));
  std::vector<IntVector> nonzero_ineqs;
  for (auto& a : ineqs)
    if (!is_zero(a)) nonzero_ineqs.push_back(std::move(a));
  return Cone::from_inequalities(k.cols(), nonzero_ineqs, nonzero_eqs);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("intersect: rank mismatch");
  std::vector<IntVector> ineqs = a.facets(), eqs = a.equations();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_rank(), ineqs, eqs);
}

Cone cone_sum(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("cone_sum: rank mismatch");
  std::vector<IntVector> rays = a.generators(), lin = a.lineality_generators();
  rays.insert(rays.end(), b.generators().begin(), b.generators().end());
  lin.insert(lin.end(), b.lineality_generators().begin(), b.lineality_generators().end());
  return Cone(a.ambient_rank(), std::move(rays), std::move(lin));
}

bool is_smooth(const Cone& c) {
  if (!c.is_pointed()) throw std::invalid_argument("is_smooth: cone is not strongly convex");
  const auto& rays = c.rays();
  if (rays.size() != c.dimension()) return false;
  if (rays.empty()) return true;
  auto divisors = elementary_divisors(RatMatrix::from_int_rows(rays));
  if (divisors.size() != rays.size()) return false;
  return std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; });
}

bool is_face(const Cone& face, const Cone& c) {
  if (face.ambient_rank() != c.ambient_rank()) return false;
  for (const auto& r : face.rays())
    if (!c.contains(r)) return false;
  std::vector<IntVector> face_lin = face.lineality_basis();
  for (const auto& l : face_lin) {
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    if (!c.contains(l) || !c.contains(neg)) return false;
  }
  std::vector<IntVector> eqs = c.equations();
  for (const auto& f : c.facets()) {
    bool vanishes = true;
    for (const auto& r : face.rays())
      if (dot(f, r) != 0) {
        vanishes = false;
        break;
      }
    for (const auto& l : face_lin)
      if (vanishes && dot(f, l) != 0) vanishes = false;
    if (vanishes) eqs.push_back(f);
  }
  return Cone::from_inequalities(c.ambient_rank(), c.facets(), eqs) == face;
}

}  // namespace degen
