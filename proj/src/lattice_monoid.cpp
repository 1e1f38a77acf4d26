#include "torusbb/lattice_monoid.hpp"

#include <algorithm>
#include <functional>

#include "torusbb/errors.hpp"
#include "torusbb/linalg.hpp"

namespace torusbb {
namespace {

void require_rank(const IntVector& v, std::size_t rank, const char* what) {
  if (v.size() != rank)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(v.size()) +
                    ", expected rank " + std::to_string(rank),
                to_string(v));
}

// Generators (lineality) and extreme rays of a cone {u : <h, u> >= 0 for h in H},
// maintained incrementally.
struct DualCone {
  IntMatrix lineality;
  IntMatrix rays;
  IntMatrix constraints;
};

// Two rays are adjacent when the constraints tight at both have rank
// dim - 2, where dim is the dimension of the pointed quotient.
bool adjacent(const DualCone& cone, const IntVector& p, const IntVector& q) {
  const std::size_t pointed_dim = p.size() - cone.lineality.size();
  if (pointed_dim < 2) return true;
  IntMatrix tight;
  for (const auto& h : cone.constraints)
    if (dot(h, p) == 0 && dot(h, q) == 0) tight.push_back(h);
  if (tight.size() + 2 < pointed_dim) return false;
  return linalg::rank(tight) == pointed_dim - 2;
}

void add_constraint(DualCone& cone, const IntVector& h) {
  if (is_zero(h)) return;
  auto hit = std::find_if(cone.lineality.begin(), cone.lineality.end(),
                          [&](const IntVector& l) { return dot(h, l) != 0; });
  if (hit != cone.lineality.end()) {
    IntVector l = *hit;
    cone.lineality.erase(hit);
    Integer c = dot(h, l);
    if (c < 0) {
      l = negated(l);
      c = -c;
    }
    auto shift = [&](IntVector v) {
      const Integer s = dot(h, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * v[i] - s * l[i];
      return primitive(std::move(v));
    };
    for (auto& v : cone.lineality) v = shift(std::move(v));
    for (auto& v : cone.rays) v = shift(std::move(v));
    cone.rays.push_back(primitive(std::move(l)));
    cone.constraints.push_back(h);
    return;
  }

  IntMatrix pos, zero, neg;
  for (auto& r : cone.rays) {
    const int sign = sgn(dot(h, r));
    (sign > 0 ? pos : sign < 0 ? neg : zero).push_back(std::move(r));
  }
  IntMatrix next = pos;
  next.insert(next.end(), zero.begin(), zero.end());
  for (const auto& p : pos) {
    const Integer sp = dot(h, p);
    for (const auto& q : neg) {
      if (!adjacent(cone, p, q)) continue;
      const Integer sq = dot(h, q);
      IntVector v(p.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = sp * q[i] - sq * p[i];
      next.push_back(primitive(std::move(v)));
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  cone.rays = std::move(next);
  cone.constraints.push_back(h);
}

}  // namespace

AffineMonoid AffineMonoid::from_generators(IntMatrix generators, std::size_t rank) {
  if (rank == 0)
    throw Error(ErrorCode::DimensionMismatch, "monoid rank must be positive");
  if (generators.empty())
    throw Error(ErrorCode::EmptyGenerators, "monoid needs at least one generator");
  for (const auto& g : generators) require_rank(g, rank, "generator");
  return build(std::move(generators), rank);
}

AffineMonoid AffineMonoid::build(IntMatrix generators, std::size_t rank) {
  AffineMonoid s;
  s.rank_ = rank;
  s.generators_ = std::move(generators);

  // Dual cone {u : <g, u> >= 0}; its extreme rays are the facet normals and
  // its lineality space is the orthogonal complement of span(S).
  DualCone dual;
  for (std::size_t i = 0; i < rank; ++i) {
    IntVector e(rank, 0);
    e[i] = 1;
    dual.lineality.push_back(std::move(e));
  }
  for (const auto& g : s.generators_) add_constraint(dual, g);

  linalg::RationalMatrix complement;
  for (const auto& l : dual.lineality) complement.emplace_back(l.begin(), l.end());
  IntMatrix equations;
  for (const auto& row : linalg::reduced_row_echelon(std::move(complement)))
    equations.push_back(clear_denominators(row));

  for (const auto& r : dual.rays) s.facet_normals_.push_back(linalg::project_out(r, equations));
  for (const auto& e : equations) {
    s.facet_normals_.push_back(e);
    s.facet_normals_.push_back(negated(e));
  }
  std::sort(s.facet_normals_.begin(), s.facet_normals_.end());
  s.facet_normals_.erase(std::unique(s.facet_normals_.begin(), s.facet_normals_.end()),
                         s.facet_normals_.end());

  s.lineality_basis_ = linalg::hermite_normal_form(linalg::integer_kernel(s.facet_normals_, rank));
  return s;
}

AffineMonoid cone_from_generators(const IntMatrix& generators, std::size_t rank) {
  return AffineMonoid::from_generators(generators, rank);
}

bool contains(const AffineMonoid& s, const IntVector& m) {
  require_rank(m, s.rank(), "lattice point");
  return std::all_of(s.facet_normals().begin(), s.facet_normals().end(),
                     [&](const IntVector& f) { return dot(f, m) >= 0; });
}

IntMatrix units(const AffineMonoid& s) { return s.lineality_basis(); }

bool has_zero(const AffineMonoid& s) { return s.lineality_basis().empty(); }

KempfVector kempf_vector(const AffineMonoid& s) {
  if (!has_zero(s))
    throw Error(ErrorCode::MonoidHasUnits,
                "monoid has nontrivial units; reduce it to a monoid with zero first");
  const std::size_t n = s.rank();
  IntMatrix gens;
  for (const auto& g : s.generators())
    if (!is_zero(g)) gens.push_back(g);

  // Sum of facet normals is strictly positive on every nonzero generator,
  // which bounds the search.
  IntVector interior(n, 0);
  for (const auto& f : s.facet_normals())
    for (std::size_t i = 0; i < n; ++i) interior[i] += f[i];
  Integer limit = 0;
  for (const auto& e : interior) limit = std::max<Integer>(limit, abs(e));

  // suffix[k][j] = sum of |gens[j][i]| over i >= k
  std::vector<std::vector<Integer>> suffix(n + 1, std::vector<Integer>(gens.size(), 0));
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t j = 0; j < gens.size(); ++j) suffix[k][j] = suffix[k + 1][j] + abs(gens[j][k]);

  IntVector w(n);
  std::vector<Integer> partial(gens.size(), 0);
  for (Integer bound = 0; bound <= limit; ++bound) {
    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (partial[j] + bound * suffix[k][j] < 1) return false;
      if (k == n) return true;
      for (Integer v = -bound; v <= bound; ++v) {
        w[k] = v;
        for (std::size_t j = 0; j < gens.size(); ++j) partial[j] += v * gens[j][k];
        const bool found = search(k + 1);
        for (std::size_t j = 0; j < gens.size(); ++j) partial[j] -= v * gens[j][k];
        if (found) return true;
      }
      return false;
    };
    if (search(0)) return KempfVector{w};
  }
  throw Error(ErrorCode::InvalidArgument, "no Kempf vector within the interior bound");
}

IntVector LatticeProjection::apply(const IntVector& m) const {
  require_rank(m, source_rank_, "lattice point");
  IntVector out(target_rank_);
  for (std::size_t i = 0; i < target_rank_; ++i) out[i] = dot(matrix_[i], m);
  return out;
}

LatticeProjection reduce_to_zero(const AffineMonoid& s) {
  LatticeProjection p;
  p.source_rank_ = s.rank();
  // Rows: a basis of the lattice orthogonal to the units. Its kernel is the
  // saturated unit lattice and it maps onto Z^(n - dim L).
  p.matrix_ = linalg::hermite_normal_form(linalg::integer_kernel(s.lineality_basis(), s.rank()));
  p.target_rank_ = p.matrix_.size();
  IntMatrix images;
  for (const auto& g : s.generators()) {
    IntVector image = p.apply(g);
    if (!is_zero(image)) images.push_back(std::move(image));
  }
  p.image_monoid_ = AffineMonoid::build(std::move(images), p.target_rank_);
  return p;
}

}  // namespace torusbb
