#include "torusbb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace torusbb {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

VariableWeighting::VariableWeighting(std::size_t torus_rank, std::vector<Variable> variables)
    : torus_rank_(torus_rank), variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v.name))
      throw Error(ErrorCode::InvalidInput, "invalid variable name '" + v.name + "'", v.name);
    if (!seen.insert(v.name).second)
      throw Error(ErrorCode::InvalidInput, "duplicate variable name '" + v.name + "'", v.name);
    if (v.weight.size() != torus_rank_)
      throw Error(ErrorCode::DimensionMismatch,
                  "weight of '" + v.name + "' has length " + std::to_string(v.weight.size()) +
                      ", expected " + std::to_string(torus_rank_),
                  v.name);
  }
}

std::optional<std::size_t> VariableWeighting::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  return std::nullopt;
}

VariableWeighting VariableWeighting::restricted(const std::vector<bool>& keep) const {
  std::vector<Variable> kept;
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (keep[i]) kept.push_back(variables_[i]);
  return VariableWeighting(torus_rank_, std::move(kept));
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::uint64_t e = std::uint64_t{exponents[i]} + other.exponents[i];
    if (e > kMaxExponent) throw Error(ErrorCode::Overflow, "exponent exceeds 2^31-1");
    out.exponents[i] = static_cast<Exponent>(e);
  }
  return out;
}

IntVector weight_of(const Monomial& m, const VariableWeighting& w) {
  if (m.exponents.size() != w.size())
    throw Error(ErrorCode::DimensionMismatch,
                "monomial has " + std::to_string(m.exponents.size()) + " exponents, ring has " +
                    std::to_string(w.size()) + " variables");
  IntVector out(w.torus_rank(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    const Integer e = static_cast<unsigned long>(m.exponents[i]);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += e * w[i].weight[k];
  }
  return out;
}

GradedPolynomial::GradedPolynomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial)
      terms_.back().coefficient += t.coefficient;
    else
      terms_.push_back(std::move(t));
    if (terms_.back().coefficient == 0) terms_.pop_back();
  }
}

GradedPolynomial GradedPolynomial::monic() const {
  if (terms_.empty()) return *this;
  GradedPolynomial out = *this;
  const Rational lead = terms_.front().coefficient;
  for (auto& t : out.terms_) t.coefficient /= lead;
  return out;
}

GradedPolynomial GradedPolynomial::substitute_zero(const std::vector<bool>& kill) const {
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    bool vanishes = false;
    Monomial m;
    for (std::size_t i = 0; i < kill.size(); ++i) {
      if (!kill[i]) m.exponents.push_back(t.monomial.exponents[i]);
      else if (t.monomial.exponents[i] > 0) vanishes = true;
    }
    if (!vanishes) kept.push_back({t.coefficient, std::move(m)});
  }
  return GradedPolynomial(std::move(kept));
}

bool operator<(const GradedPolynomial& a, const GradedPolynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.monomial != t.monomial) return s.monomial > t.monomial;
    if (s.coefficient != t.coefficient) return s.coefficient < t.coefficient;
  }
  return a.terms_.size() < b.terms_.size();
}

InhomogeneousError::InhomogeneousError(IntVector first, IntVector second)
    : Error(ErrorCode::Inhomogeneous,
            "polynomial is not homogeneous: terms of weight " + to_string(first) + " and " +
                to_string(second)),
      first_(std::move(first)),
      second_(std::move(second)) {}

IntVector check_homogeneous(const GradedPolynomial& p, const VariableWeighting& w) {
  if (p.is_zero()) return IntVector(w.torus_rank(), 0);
  IntVector common = weight_of(p.terms().front().monomial, w);
  for (const auto& t : p.terms()) {
    IntVector wt = weight_of(t.monomial, w);
    if (wt != common) throw InhomogeneousError(std::move(common), std::move(wt));
  }
  return common;
}

}  // namespace torusbb
