#include "torusbb/graded_algebra.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

#include "torusbb/errors.hpp"

namespace torusbb {

GradedPresentation::GradedPresentation(VariableWeighting weighting,
                                       std::vector<GradedPolynomial> relations)
    : weighting_(std::move(weighting)) {
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    for (const auto& t : r.terms())
      if (t.monomial.exponents.size() != weighting_.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "relation built over a ring with " +
                        std::to_string(t.monomial.exponents.size()) + " variables, expected " +
                        std::to_string(weighting_.size()));
    check_homogeneous(r, weighting_);
    relations_.push_back(r.monic());
  }
  std::sort(relations_.begin(), relations_.end());
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
}

namespace {

void require_same_rank(const VariableWeighting& w, const AffineMonoid& s) {
  if (w.torus_rank() != s.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "torus rank " + std::to_string(w.torus_rank()) + " does not match monoid rank " +
                    std::to_string(s.rank()));
}

void require_zero(const AffineMonoid& s) {
  if (!has_zero(s))
    throw Error(ErrorCode::MonoidHasUnits,
                "monoid has nontrivial units; apply reduce_to_zero to the monoid and weights first");
}

std::vector<bool> outsider_mask(const VariableWeighting& w, const AffineMonoid& s) {
  std::vector<bool> mask(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) mask[i] = !contains(s, w[i].weight);
  return mask;
}

GradedPresentation kill_variables(const GradedPresentation& p, const std::vector<bool>& kill) {
  std::vector<bool> keep(kill.size());
  for (std::size_t i = 0; i < kill.size(); ++i) keep[i] = !kill[i];
  std::vector<GradedPolynomial> relations;
  for (const auto& r : p.relations()) relations.push_back(r.substitute_zero(kill));
  return GradedPresentation(p.weighting().restricted(keep), std::move(relations));
}

}  // namespace

std::vector<std::string> outsider_variables(const GradedPresentation& p, const AffineMonoid& s) {
  require_same_rank(p.weighting(), s);
  const auto mask = outsider_mask(p.weighting(), s);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) names.push_back(p.weighting()[i].name);
  return names;
}

GradedPresentation bb_plus(const GradedPresentation& p, const AffineMonoid& s) {
  require_same_rank(p.weighting(), s);
  require_zero(s);
  // Every monomial of outsider weight is divisible by an outsider variable,
  // so the outsider variables generate the ideal of X^+.
  return kill_variables(p, outsider_mask(p.weighting(), s));
}

GradedPresentation fixed_locus(const GradedPresentation& p) {
  std::vector<bool> kill(p.weighting().size());
  for (std::size_t i = 0; i < kill.size(); ++i) kill[i] = !is_zero(p.weighting()[i].weight);
  return kill_variables(p, kill);
}

bool open_immersion_check(const GradedPresentation& p, const AffineMonoid& s) {
  require_same_rank(p.weighting(), s);
  require_zero(s);
  for (const auto& r : p.relations())
    for (const auto& t : r.terms())
      if (t.monomial.total_degree() < 2)
        throw Error(ErrorCode::NotMinimalPresentation,
                    "relation has a term of degree " + std::to_string(t.monomial.total_degree()) +
                        "; eliminate variables until every relation lies in the square of the "
                        "maximal ideal at the origin");
  const auto mask = outsider_mask(p.weighting(), s);
  return std::none_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

MonomialQuotient::MonomialQuotient(VariableWeighting weighting, std::vector<Monomial> generators)
    : weighting_(std::move(weighting)) {
  for (const auto& g : generators)
    if (g.exponents.size() != weighting_.size())
      throw Error(ErrorCode::DimensionMismatch, "monomial generator has the wrong number of exponents");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < generators.size() && minimal; ++j)
      if (j != i && generators[j].divides(generators[i])) minimal = false;
    if (minimal) generators_.push_back(generators[i]);
  }
}

bool MonomialQuotient::is_standard(const Monomial& m) const {
  return std::none_of(generators_.begin(), generators_.end(),
                      [&](const Monomial& g) { return g.divides(m); });
}

std::uint64_t TruncationTable::dimension(std::uint64_t level, const IntVector& weight) const {
  auto it = rows.find({level, weight});
  return it == rows.end() ? 0 : it->second;
}

namespace {

constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

// Enumerates standard monomials of a monomial quotient graded by a Kempf
// vector. Variables of nonzero weight make up J.
class StandardMonomials {
public:
  StandardMonomials(const MonomialQuotient& q, const AffineMonoid& s) : q_(q) {
    const auto& w = q.weighting();
    require_same_rank(w, s);
    require_zero(s);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!contains(s, w[i].weight))
        throw Error(ErrorCode::WeightOutsideMonoid,
                    "weight " + to_string(w[i].weight) + " of '" + w[i].name +
                        "' is not in the monoid",
                    w[i].name);
    kempf_ = kempf_vector(s);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Integer d = kempf_.degree(w[i].weight);
      degrees_.push_back(d);
      in_j_.push_back(!is_zero(w[i].weight));
      if (!d.fits_ulong_p()) throw Error(ErrorCode::Overflow, "Kempf degree too large");
      small_degrees_.push_back(d.get_ui());
      caps_.push_back(kUnbounded);
      if (in_j_.back()) continue;
      for (const auto& g : q.minimal_generators()) {
        bool pure = true;
        for (std::size_t k = 0; k < g.exponents.size(); ++k)
          if (k != i && g.exponents[k] != 0) pure = false;
        if (pure) caps_.back() = std::min<std::uint64_t>(caps_.back(), g.exponents[i]);
      }
      if (caps_.back() == kUnbounded)
        throw Error(ErrorCode::InfiniteComponent,
                    "weight-zero variable '" + w[i].name +
                        "' is not nilpotent, so graded components are infinite-dimensional",
                    w[i].name);
    }
  }

  const KempfVector& kempf() const { return kempf_; }
  const std::vector<Integer>& degrees() const { return degrees_; }

  // visit(monomial, j_order, kempf_degree) for every standard monomial with
  // J-order <= max_order and Kempf degree <= max_degree.
  void for_each(std::uint64_t max_order, std::uint64_t max_degree,
                const std::function<void(const Monomial&, std::uint64_t)>& visit) const {
    const std::size_t k = q_.weighting().size();
    Monomial m{std::vector<Exponent>(k, 0)};
    std::function<void(std::size_t, std::uint64_t, std::uint64_t)> recurse =
        [&](std::size_t i, std::uint64_t order, std::uint64_t degree) {
          if (i == k) {
            visit(m, order);
            return;
          }
          for (std::uint64_t e = 0;; ++e) {
            if (in_j_[i]) {
              if (order + e > max_order) break;
              if (small_degrees_[i] * e > max_degree - degree) break;
            } else if (e >= caps_[i]) {
              break;
            }
            if (e > kMaxExponent) break;
            m.exponents[i] = static_cast<Exponent>(e);
            if (!q_.is_standard(m)) break;
            recurse(i + 1, in_j_[i] ? order + e : order, degree + small_degrees_[i] * e);
          }
          m.exponents[i] = 0;
        };
    if (!q_.is_standard(m)) return;
    recurse(0, 0, 0);
  }

private:
  const MonomialQuotient& q_;
  KempfVector kempf_;
  std::vector<Integer> degrees_;
  std::vector<std::uint64_t> small_degrees_;
  std::vector<bool> in_j_;
  std::vector<std::uint64_t> caps_;
};

std::uint64_t stable_level_of(const KempfVector& kempf, const IntVector& weight) {
  const Integer d = kempf.degree(weight);
  if (d <= 0) return 0;
  if (!d.fits_ulong_p()) throw Error(ErrorCode::Overflow, "Kempf degree too large");
  return d.get_ui();
}

}  // namespace

std::map<IntVector, std::uint64_t> truncate(const MonomialQuotient& q, const AffineMonoid& s,
                                            std::uint64_t level) {
  StandardMonomials standard(q, s);
  std::map<IntVector, std::uint64_t> dims;
  standard.for_each(level, kUnbounded, [&](const Monomial& m, std::uint64_t) {
    ++dims[weight_of(m, q.weighting())];
  });
  return dims;
}

TruncationTable truncation_table(const MonomialQuotient& q, const AffineMonoid& s,
                                 std::uint64_t max_level) {
  StandardMonomials standard(q, s);
  TruncationTable table;
  table.kempf = standard.kempf();
  table.variable_degrees = standard.degrees();
  table.max_level = max_level;
  // Count by exact J-order, then accumulate.
  std::map<IntVector, std::vector<std::uint64_t>> by_order;
  standard.for_each(max_level, kUnbounded, [&](const Monomial& m, std::uint64_t order) {
    auto& counts = by_order[weight_of(m, q.weighting())];
    counts.resize(max_level + 1, 0);
    ++counts[order];
  });
  for (const auto& [weight, counts] : by_order) {
    std::uint64_t running = 0;
    for (std::uint64_t n = 0; n <= max_level; ++n) {
      running += counts[n];
      if (running) table.rows[{n, weight}] = running;
    }
  }
  return table;
}

std::uint64_t graded_dimension(const MonomialQuotient& q, const AffineMonoid& s,
                               const IntVector& weight) {
  StandardMonomials standard(q, s);
  if (weight.size() != s.rank())
    throw Error(ErrorCode::DimensionMismatch, "weight has the wrong length", to_string(weight));
  const Integer d = standard.kempf().degree(weight);
  if (d < 0) return 0;
  const std::uint64_t degree = stable_level_of(standard.kempf(), weight);
  std::uint64_t count = 0;
  standard.for_each(kUnbounded, degree, [&](const Monomial& m, std::uint64_t) {
    if (weight_of(m, q.weighting()) == weight) ++count;
  });
  return count;
}

StabilizationReport stabilization_check(const MonomialQuotient& q, const AffineMonoid& s,
                                        const IntVector& weight, std::uint64_t max_level) {
  const TruncationTable table = truncation_table(q, s, max_level);
  StabilizationReport report;
  report.weight = weight;
  report.stable_level = stable_level_of(table.kempf, weight);
  for (std::uint64_t n = 0; n <= max_level; ++n)
    report.dimensions.push_back(table.dimension(n, weight));
  report.limit_dimension = graded_dimension(q, s, weight);
  for (std::size_t n = 1; n < report.dimensions.size(); ++n) {
    if (report.dimensions[n] < report.dimensions[n - 1]) report.monotone = false;
    if (n > report.stable_level && report.dimensions[n] != report.dimensions[n - 1])
      report.stable = false;
  }
  if (report.stable_level <= max_level)
    report.matches_limit = report.dimensions[report.stable_level] == report.limit_dimension;
  return report;
}

std::vector<AlgebraizationEntry> algebraize_report(const MonomialQuotient& q,
                                                   const AffineMonoid& s, std::uint64_t bound) {
  StandardMonomials standard(q, s);
  std::map<IntVector, std::uint64_t> limit;
  standard.for_each(kUnbounded, bound, [&](const Monomial& m, std::uint64_t) {
    ++limit[weight_of(m, q.weighting())];
  });
  const TruncationTable table = truncation_table(q, s, bound);
  for (const auto& [key, dim] : table.rows) {
    const auto& weight = key.second;
    if (stable_level_of(table.kempf, weight) <= bound) limit.try_emplace(weight, 0);
  }
  std::vector<AlgebraizationEntry> entries;
  for (const auto& [weight, dim] : limit) {
    AlgebraizationEntry e;
    e.weight = weight;
    e.stable_level = stable_level_of(table.kempf, weight);
    e.truncated_dimension = table.dimension(e.stable_level, weight);
    e.limit_dimension = dim;
    entries.push_back(std::move(e));
  }
  return entries;
}

bool algebraize_check(const MonomialQuotient& q, const AffineMonoid& s, std::uint64_t bound) {
  const auto entries = algebraize_report(q, s, bound);
  return std::all_of(entries.begin(), entries.end(), [](const AlgebraizationEntry& e) {
    return e.truncated_dimension == e.limit_dimension;
  });
}

}  // namespace torusbb
