#include "torusbb/integer.hpp"

namespace torusbb {

IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  for (const auto& e : v)
    if (e != 0) return false;
  return true;
}

IntVector negated(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return g;
}

IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector primitive_signed(IntVector v) {
  v = primitive(std::move(v));
  for (const auto& e : v) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& f : v) f = -f;
    break;
  }
  return v;
}

IntVector clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(std::move(out));
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace torusbb
