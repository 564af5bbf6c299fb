#include "degen/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "degen/double_description.hpp"

namespace degen {
namespace {

Integer common_denominator(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// (den * v, den) with den the common denominator of v.
IntVector homogenize(const RatVector& v) {
  Integer den = common_denominator(v);
  IntVector out;
  out.reserve(v.size() + 1);
  for (const auto& x : v) out.emplace_back(x.get_num() * (den / x.get_den()));
  out.push_back(den);
  return out;
}

IntVector append_zero(const IntVector& v) {
  IntVector out = v;
  out.emplace_back(0);
  return out;
}

// <a, x> >= offset  ->  integer row (a', -offset') of <(a', c), (x, h)> >= 0.
IntVector homogeneous_row(const IntVector& a, const Rational& offset) {
  RatVector v = to_rational(a);
  v.push_back(-offset);
  Integer den = common_denominator(v);
  IntVector out;
  for (const auto& x : v) out.emplace_back(x.get_num() * (den / x.get_den()));
  return out;
}

void sort_points(std::vector<RatVector>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::vector<IntVector> drop_last(const std::vector<IntVector>& vs) {
  std::vector<IntVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v.begin(), v.end() - 1);
  return out;
}

// Integer normal and value for a rational row equation <row, x> = value.
AffineEquation integer_equation(const RatVector& row, const Rational& value) {
  Integer den = common_denominator(row);
  IntVector normal;
  for (const auto& x : row) normal.emplace_back(x.get_num() * (den / x.get_den()));
  return AffineEquation{normal, value * Rational(den)};
}

}  // namespace

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

LatticePolyhedron::LatticePolyhedron(std::size_t ambient_rank, std::vector<RatVector> points)
    : LatticePolyhedron(ambient_rank, std::move(points), Cone::zero(ambient_rank)) {}

LatticePolyhedron::LatticePolyhedron(std::size_t ambient_rank, std::vector<RatVector> points, Cone recession)
    : rank_(ambient_rank), candidates_(std::move(points)), recession_(std::move(recession)),
      cache_(std::make_shared<Cache>()) {
  if (recession_.ambient_rank() != rank_) throw std::invalid_argument("recession cone has wrong rank");
  for (const auto& p : candidates_)
    if (p.size() != rank_) throw std::invalid_argument("polyhedron point has wrong dimension");
  sort_points(candidates_);
}

LatticePolyhedron LatticePolyhedron::from_inequalities(std::size_t ambient_rank, const std::vector<Facet>& facets,
                                                       const std::vector<AffineEquation>& equations) {
  std::vector<IntVector> rows, eqs;
  for (const auto& f : facets) {
    if (f.normal.size() != ambient_rank) throw std::invalid_argument("facet has wrong dimension");
    rows.push_back(homogeneous_row(f.normal, f.offset));
  }
  IntVector height(ambient_rank + 1);
  height[ambient_rank] = 1;
  rows.push_back(height);
  for (const auto& e : equations) {
    if (e.normal.size() != ambient_rank) throw std::invalid_argument("equation has wrong dimension");
    eqs.push_back(homogeneous_row(e.normal, e.value));
  }
  ConeGenerators g = solve_homogeneous_system(ambient_rank + 1, rows, eqs);
  std::vector<RatVector> points;
  std::vector<IntVector> rec;
  for (const auto& r : g.rays) {
    const Integer& h = r[ambient_rank];
    if (h > 0) {
      RatVector p;
      for (std::size_t i = 0; i < ambient_rank; ++i) p.push_back(make_rational(r[i], h));
      points.push_back(std::move(p));
    } else {
      rec.emplace_back(r.begin(), r.end() - 1);
    }
  }
  if (points.empty()) return empty(ambient_rank);
  LatticePolyhedron out(ambient_rank, std::move(points), Cone(ambient_rank, rec, drop_last(g.lineality)));
  if (g.lineality.empty()) {
    // the homogenized cone is pointed, so the points found are exactly the vertices
    std::call_once(out.cache_->canonical_once, [&] {
      out.cache_->canonical = Canonical{out.candidates_, canonical_form(out.recession_)};
    });
  }
  return out;
}

LatticePolyhedron LatticePolyhedron::cube(std::size_t k) {
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k);
    e[i] = 1;
    facets.push_back(Facet{e, 0});
    e[i] = -1;
    facets.push_back(Facet{e, -1});
  }
  return from_inequalities(k, facets);
}

void LatticePolyhedron::compute_hull() const {
  // called inside canonical_once; fills canonical data and the facet representation
  std::vector<IntVector> gens, lin;
  for (const auto& p : candidates_) gens.push_back(homogenize(p));
  for (const auto& r : recession_.generators()) gens.push_back(append_zero(r));
  for (const auto& l : recession_.lineality_generators()) lin.push_back(append_zero(l));
  Cone c(rank_ + 1, gens, lin);

  Canonical data;
  std::vector<IntVector> rec_rays;
  for (const auto& r : c.rays()) {
    const Integer& h = r[rank_];
    if (h > 0) {
      RatVector v;
      for (std::size_t i = 0; i < rank_; ++i) v.push_back(make_rational(r[i], h));
      data.vertices.push_back(std::move(v));
    } else {
      rec_rays.emplace_back(r.begin(), r.end() - 1);
    }
  }
  sort_points(data.vertices);
  data.recession = canonical_form(Cone(rank_, rec_rays, drop_last(c.lineality_basis())));
  cache_->canonical = std::move(data);

  HRep h;
  for (const auto& f : c.facets()) {
    IntVector a(f.begin(), f.end() - 1);
    if (is_zero(a)) continue;
    h.facets.push_back(Facet{std::move(a), Rational(-f[rank_])});
  }
  for (const auto& e : c.equations()) h.equations.push_back(AffineEquation{IntVector(e.begin(), e.end() - 1), Rational(-e[rank_])});
  std::call_once(cache_->hrep_once, [&] { cache_->hrep = std::move(h); });
}

const LatticePolyhedron::Canonical& LatticePolyhedron::canonical() const {
  std::call_once(cache_->canonical_once, [this] {
    if (candidates_.empty()) {
      cache_->canonical = Canonical{{}, canonical_form(recession_)};
      std::call_once(cache_->hrep_once, [] {});
      return;
    }
    compute_hull();
  });
  return cache_->canonical;
}

const LatticePolyhedron::HRep& LatticePolyhedron::hrep() const {
  const Canonical& data = canonical();
  std::call_once(cache_->hrep_once, [&] {
    // canonical data came from elsewhere; run the hull on the vertex set
    LatticePolyhedron tmp(rank_, data.vertices, data.recession);
    cache_->hrep = tmp.hrep();
  });
  return cache_->hrep;
}

const Cone& LatticePolyhedron::normal_cone(std::size_t vertex_index) const {
  const auto& verts = vertices();
  if (vertex_index >= verts.size()) throw std::out_of_range("normal_cone: vertex index");
  std::call_once(cache_->normal_once, [&] {
    const HRep& h = hrep();
    std::vector<IntVector> lin;
    for (const auto& e : h.equations) lin.push_back(e.normal);
    for (const auto& v : verts) {
      std::vector<IntVector> active;
      for (const auto& f : h.facets)
        if (dot(f.normal, v) == f.offset) active.push_back(f.normal);
      cache_->normal_cones.emplace_back(rank_, active, lin);
    }
  });
  return cache_->normal_cones[vertex_index];
}

std::size_t LatticePolyhedron::dimension() const {
  if (is_empty()) return 0;
  return rank_ - equations().size();
}

bool LatticePolyhedron::contains(const RatVector& x) const {
  if (x.size() != rank_) throw std::invalid_argument("contains: dimension mismatch");
  if (is_empty()) return false;
  for (const auto& e : equations())
    if (dot(e.normal, x) != e.value) return false;
  for (const auto& f : facets())
    if (dot(f.normal, x) < f.offset) return false;
  return true;
}

bool LatticePolyhedron::operator==(const LatticePolyhedron& other) const {
  if (rank_ != other.rank_) return false;
  if (is_empty() || other.is_empty()) return is_empty() && other.is_empty();
  return vertices() == other.vertices() && recession() == other.recession();
}

LatticePolyhedron canonicalize(const LatticePolyhedron& p) {
  const auto& data = p.canonical();
  LatticePolyhedron out(p.ambient_rank(), data.vertices, data.recession);
  out.cache_ = p.cache_;
  return out;
}

LatticePolyhedron minkowski_sum(const LatticePolyhedron& p, const LatticePolyhedron& q) {
  const std::size_t d = p.ambient_rank();
  if (q.ambient_rank() != d) throw std::invalid_argument("minkowski_sum: rank mismatch");
  if (p.is_empty() || q.is_empty()) return LatticePolyhedron::empty(d);
  Cone rec = canonical_form(cone_sum(p.recession_generators(), q.recession_generators()));
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  if (!rec.is_pointed()) {
    std::vector<RatVector> sums;
    for (const auto& a : pv)
      for (const auto& b : qv) {
        RatVector s(d);
        for (std::size_t i = 0; i < d; ++i) s[i] = a[i] + b[i];
        sums.push_back(std::move(s));
      }
    return canonicalize(LatticePolyhedron(d, std::move(sums), rec));
  }
  // v + w is a vertex of p + q iff the normal cones at v and w meet in an open set; the
  // normal cone of the sum is then their intersection
  std::vector<std::pair<RatVector, Cone>> found;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    const Cone& ni = p.normal_cone(i);
    for (std::size_t j = 0; j < qv.size(); ++j) {
      const Cone& nj = q.normal_cone(j);
      std::vector<IntVector> ineqs = ni.facets(), eqs = ni.equations();
      ineqs.insert(ineqs.end(), nj.facets().begin(), nj.facets().end());
      eqs.insert(eqs.end(), nj.equations().begin(), nj.equations().end());
      ConeGenerators g = solve_homogeneous_system(d, ineqs, eqs);
      std::vector<IntVector> all = g.rays;
      all.insert(all.end(), g.lineality.begin(), g.lineality.end());
      if (rank(all, d) != d) continue;
      RatVector s(d);
      for (std::size_t k = 0; k < d; ++k) s[k] = pv[i][k] + qv[j][k];
      found.emplace_back(std::move(s), Cone(d, std::move(g.rays), std::move(g.lineality)));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  std::vector<RatVector> verts;
  for (const auto& f : found) verts.push_back(f.first);
  LatticePolyhedron out(d, verts, rec);
  std::call_once(out.cache_->canonical_once, [&] { out.cache_->canonical = LatticePolyhedron::Canonical{verts, rec}; });
  std::call_once(out.cache_->normal_once, [&] {
    for (auto& f : found) out.cache_->normal_cones.push_back(std::move(f.second));
  });
  return out;
}

LatticePolyhedron linear_image(const RatMatrix& f, const LatticePolyhedron& p) {
  if (f.cols() != p.ambient_rank()) throw std::invalid_argument("linear_image: rank mismatch");
  if (p.is_empty()) return LatticePolyhedron::empty(f.rows());
  std::vector<RatVector> pts;
  for (const auto& v : p.vertex_candidates()) pts.push_back(f * v);
  return canonicalize(LatticePolyhedron(f.rows(), std::move(pts), image_cone(f, p.recession_generators())));
}

LatticePolyhedron affine_slice(const LatticePolyhedron& p, const RatMatrix& f, const RatVector& target) {
  if (f.cols() != p.ambient_rank() || f.rows() != target.size())
    throw std::invalid_argument("affine_slice: dimension mismatch");
  if (p.is_empty()) return p;
  std::vector<AffineEquation> eqs = p.equations();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    AffineEquation e = integer_equation(f.row(i), target[i]);
    if (is_zero(e.normal)) {
      if (e.value != 0) return LatticePolyhedron::empty(p.ambient_rank());
      continue;
    }
    eqs.push_back(std::move(e));
  }
  return LatticePolyhedron::from_inequalities(p.ambient_rank(), p.facets(), eqs);
}

LatticePolyhedron affine_transform(const LatticePolyhedron& p, const Rational& scale, const RatMatrix& m,
                                   const RatVector& shift) {
  if (m.cols() != p.ambient_rank() || shift.size() != p.ambient_rank())
    throw std::invalid_argument("affine_transform: dimension mismatch");
  if (scale == 0) throw std::invalid_argument("affine_transform: zero scale");
  if (p.is_empty()) return LatticePolyhedron::empty(m.rows());
  RatMatrix sm = m * scale;
  std::vector<RatVector> pts;
  for (const auto& v : p.vertex_candidates()) {
    RatVector d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i] - shift[i];
    pts.push_back(sm * d);
  }
  return canonicalize(LatticePolyhedron(m.rows(), std::move(pts), image_cone(sm, p.recession_generators())));
}

Cone cone_over(const LatticePolyhedron& p) {
  const std::size_t d = p.ambient_rank();
  if (p.is_empty()) return Cone::zero(d + 1);
  std::vector<IntVector> gens, lin;
  for (const auto& v : p.vertices()) gens.push_back(homogenize(v));
  for (const auto& r : p.recession().rays()) gens.push_back(append_zero(r));
  for (const auto& l : p.recession().lineality_basis()) lin.push_back(append_zero(l));
  return Cone(d + 1, gens, lin);
}

LatticePolyhedron height_slice(const Cone& c, const Rational& t) {
  if (c.ambient_rank() == 0) throw std::invalid_argument("height_slice: rank 0 cone");
  const std::size_t d = c.ambient_rank() - 1;
  std::vector<Facet> facets;
  std::vector<AffineEquation> eqs;
  for (const auto& f : c.facets()) {
    IntVector a(f.begin(), f.end() - 1);
    Rational off = -Rational(f[d]) * t;
    if (is_zero(a)) {
      if (off > 0) return LatticePolyhedron::empty(d);
      continue;
    }
    facets.push_back(Facet{std::move(a), off});
  }
  for (const auto& e : c.equations()) {
    IntVector a(e.begin(), e.end() - 1);
    Rational val = -Rational(e[d]) * t;
    if (is_zero(a)) {
      if (val != 0) return LatticePolyhedron::empty(d);
      continue;
    }
    eqs.push_back(AffineEquation{std::move(a), val});
  }
  return LatticePolyhedron::from_inequalities(d, facets, eqs);
}

std::vector<bool> check_semigroup_generation(const LatticePolyhedron& p, const std::vector<IntVector>& extra_monomials,
                                             std::size_t degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree_bound must be at least 1");
  const std::size_t d = p.ambient_rank();
  std::vector<bool> verdicts;
  if (p.is_empty()) return verdicts;
  std::vector<IntVector> base;
  for (const auto& r : p.recession().rays()) base.push_back(r);
  for (const auto& l : p.recession().lineality_basis()) {
    base.push_back(l);
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    base.push_back(neg);
  }
  const auto& verts = p.vertices();
  for (std::size_t vi = 0; vi < verts.size(); ++vi) {
    const RatVector& vr = verts[vi];
    if (!std::all_of(vr.begin(), vr.end(), is_integer)) {
      verdicts.push_back(false);
      continue;
    }
    IntVector v;
    for (const auto& x : vr) v.push_back(x.get_num());
    const Cone& sigma = p.normal_cone(vi);
    if (!sigma.is_full_dimensional())
      throw std::invalid_argument("check_semigroup_generation: polyhedron is not full-dimensional");
    Cone tangent = dual_cone(sigma);
    IntVector h(d);
    for (const auto& r : sigma.rays())
      for (std::size_t i = 0; i < d; ++i) h[i] += r[i];

    std::vector<IntVector> gens = base;
    for (const auto& m : extra_monomials) {
      IntVector g(d);
      for (std::size_t i = 0; i < d; ++i) g[i] = m[i] - v[i];
      gens.push_back(std::move(g));
    }
    IntVector minus_v = v;
    for (auto& x : minus_v) x = -x;
    gens.push_back(minus_v);
    std::vector<IntVector> usable;
    for (auto& g : gens)
      if (!is_zero(g) && tangent.contains(g)) usable.push_back(std::move(g));
    std::sort(usable.begin(), usable.end());
    usable.erase(std::unique(usable.begin(), usable.end()), usable.end());

    // h is strictly positive on the pointed cone tangent \ {0}, so h bounds the recursion depth
    std::map<IntVector, bool> memo;
    std::function<bool(const IntVector&)> member = [&](const IntVector& m) -> bool {
      if (is_zero(m)) return true;
      auto it = memo.find(m);
      if (it != memo.end()) return it->second;
      bool ok = false;
      Integer hm = dot(h, m);
      for (const auto& g : usable) {
        if (dot(h, g) > hm) continue;
        IntVector rest(d);
        for (std::size_t i = 0; i < d; ++i) rest[i] = m[i] - g[i];
        if (!tangent.contains(rest)) continue;
        if (member(rest)) {
          ok = true;
          break;
        }
      }
      memo.emplace(m, ok);
      return ok;
    };

    bool all = true;
    IntVector m(d);
    std::function<void(std::size_t, long)> walk = [&](std::size_t i, long budget) {
      if (!all) return;
      if (i == d) {
        if (tangent.contains(m) && !member(m)) all = false;
        return;
      }
      for (long x = -budget; x <= budget; ++x) {
        m[i] = x;
        walk(i + 1, budget - (x < 0 ? -x : x));
      }
      m[i] = 0;
    };
    walk(0, static_cast<long>(degree_bound));
    verdicts.push_back(all);
  }
  return verdicts;
}

}  // namespace degen
