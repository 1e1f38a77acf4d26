#include "torusbb/hilb_cells.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "torusbb/errors.hpp"
#include "torusbb/linalg.hpp"

namespace torusbb::hilb {

namespace {

std::string describe(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(ErrorCode::InvalidArgument,
                  "partition parts must be positive and weakly decreasing", describe(*this));
    size_ += parts_[i];
  }
}

int Partition::row_length(int b) const {
  return b >= 0 && b < static_cast<int>(parts_.size()) ? parts_[b] : 0;
}

int Partition::column_length(int a) const {
  int n = 0;
  for (int p : parts_)
    if (p > a) ++n;
  return n;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int a = 0; a < row_length(0); ++a) t.push_back(column_length(a));
  return Partition(std::move(t));
}

std::vector<Partition> partitions(int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "d must be nonnegative", std::to_string(d));
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      build(remaining - p, p);
      current.pop_back();
    }
  };
  build(d, d);
  return out;
}

MonomialIdealPlane ideal_from_partition(const Partition& p) {
  MonomialIdealPlane m{p, {}};
  const int rows = static_cast<int>(p.parts().size());
  for (int b = rows; b >= 0; --b) {
    const int a = p.row_length(b);
    if (b == 0 || a < p.row_length(b - 1)) m.minimal_generators.push_back({a, b});
  }
  return m;
}

void BigradedCharacter::add(const Weight2& w, std::uint64_t multiplicity) {
  if (multiplicity) entries_[w] += multiplicity;
}

std::uint64_t BigradedCharacter::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, m] : entries_) t += m;
  return t;
}

BigradedCharacter BigradedCharacter::swapped() const {
  BigradedCharacter out;
  for (const auto& [w, m] : entries_) out.add({w[1], w[0]}, m);
  return out;
}

WeightVector2::WeightVector2(std::int64_t w1, std::int64_t w2) : w_{w1, w2} {
  if (w1 == 0 && w2 == 0)
    throw Error(ErrorCode::InvalidArgument, "weight vector must be nonzero", "(0,0)");
}

BigradedCharacter tangent_character_linalg(const MonomialIdealPlane& m) {
  const Partition& p = m.partition;
  const int d = p.size();
  const auto& gens = m.minimal_generators;
  auto standard = [&](int a, int b) { return a >= 0 && b >= 0 && a < p.row_length(b); };

  BigradedCharacter chi;
  for (int d1 = -d; d1 <= d; ++d1) {
    for (int d2 = -d; d2 <= d; ++d2) {
      // Unknown i: coefficient of the image of generator i, which must be the
      // standard monomial gens[i] - delta.
      std::vector<int> column(gens.size(), -1);
      std::size_t unknowns = 0;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (standard(gens[i][0] - d1, gens[i][1] - d2)) column[i] = static_cast<int>(unknowns++);
      if (unknowns == 0) continue;

      // Syzygy between consecutive generators: x^(a_{i+1}-a_i) phi(g_i) = y^(b_i-b_{i+1}) phi(g_{i+1}),
      // both sides living on the monomial lcm - delta.
      IntMatrix equations;
      for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
        if (!standard(gens[i + 1][0] - d1, gens[i][1] - d2)) continue;
        IntVector row(unknowns, 0);
        if (column[i] >= 0) row[column[i]] += 1;
        if (column[i + 1] >= 0) row[column[i + 1]] -= 1;
        if (!is_zero(row)) equations.push_back(std::move(row));
      }
      const std::size_t dim = unknowns - linalg::rank(equations);
      chi.add({d1, d2}, dim);
    }
  }
  return chi;
}

BigradedCharacter tangent_character_armleg(const MonomialIdealPlane& m) {
  const Partition& p = m.partition;
  BigradedCharacter chi;
  for (int b = 0; b < static_cast<int>(p.parts().size()); ++b) {
    for (int a = 0; a < p.row_length(b); ++a) {
      const std::int64_t arm = p.row_length(b) - a - 1;
      const std::int64_t leg = p.column_length(a) - b - 1;
      chi.add({arm + 1, -leg});
      chi.add({-arm, leg + 1});
    }
  }
  return chi;
}

bool is_generic(const BigradedCharacter& c, const WeightVector2& w) {
  return std::none_of(c.entries().begin(), c.entries().end(),
                      [&](const auto& e) { return w.pair(e.first) == 0; });
}

std::uint64_t cell_dimension(const BigradedCharacter& c, const WeightVector2& w) {
  std::uint64_t n = 0;
  for (const auto& [delta, mult] : c.entries())
    if (w.pair(delta) >= 0) n += mult;
  return n;
}

std::uint64_t cell_dimension(const MonomialIdealPlane& m, const WeightVector2& w) {
  return cell_dimension(tangent_character_linalg(m), w);
}

std::uint64_t intersection_dimension(const BigradedCharacter& c, const WeightVector2& w1,
                                     const WeightVector2& w2) {
  std::uint64_t n = 0;
  for (const auto& [delta, mult] : c.entries())
    if (w1.pair(delta) >= 0 && w2.pair(delta) >= 0) n += mult;
  return n;
}

std::uint64_t intersection_dimension(const MonomialIdealPlane& m, const WeightVector2& w1,
                                     const WeightVector2& w2) {
  return intersection_dimension(tangent_character_linalg(m), w1, w2);
}

WeightVector2 default_generic_weight(int d) { return WeightVector2(1, std::int64_t{d} + 1); }

std::vector<std::pair<std::uint64_t, std::uint64_t>> poincare_polynomial(int d,
                                                                         const WeightVector2& w) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& p : partitions(d)) {
    const BigradedCharacter chi = tangent_character_linalg(ideal_from_partition(p));
    for (const auto& [delta, mult] : chi.entries())
      if (w.pair(delta) == 0)
        throw Error(ErrorCode::NonGenericWeight,
                    "weight (" + std::to_string(w.value()[0]) + "," + std::to_string(w.value()[1]) +
                        ") pairs to zero with tangent weight (" + std::to_string(delta[0]) + "," +
                        std::to_string(delta[1]) + ") at partition " + describe(p),
                    describe(p));
    ++histogram[cell_dimension(chi, w)];
  }
  return {histogram.begin(), histogram.end()};
}

}  // namespace torusbb::hilb
