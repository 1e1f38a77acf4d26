#include "torusbb/parser.hpp"

#include <cctype>

#include "torusbb/errors.hpp"

namespace torusbb {
namespace {

class PolynomialParser {
public:
  PolynomialParser(std::string_view text, const VariableWeighting& ring)
      : text_(text), ring_(ring) {}

  GradedPolynomial parse() {
    std::vector<Term> terms;
    skip_space();
    bool negative = accept('-');
    terms.push_back(term(negative));
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (accept('+')) negative = false;
      else if (accept('-')) negative = true;
      else fail("expected '+', '-' or end of input");
      terms.push_back(term(negative));
    }
    return GradedPolynomial(std::move(terms));
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                what + " at byte offset " + std::to_string(pos_), std::to_string(pos_));
  }

  Integer digits() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Term term(bool negative) {
    skip_space();
    Term t{Rational(1), Monomial{std::vector<Exponent>(ring_.size(), 0)}};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = digits();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      t.coefficient = Rational(num, den);
      t.coefficient.canonicalize();
      if (!accept('*')) {
        if (negative) t.coefficient = -t.coefficient;
        return t;
      }
    }
    factor(t.monomial);
    while (accept('*')) factor(t.monomial);
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  void factor(Monomial& m) {
    skip_space();
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable name");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const auto index = ring_.index_of(name);
    if (!index) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'", name);
    std::uint64_t e = 1;
    if (accept('^')) {
      const std::size_t at = pos_;
      const Integer value = digits();
      if (value > kMaxExponent) {
        pos_ = at;
        throw Error(ErrorCode::Overflow,
                    "exponent exceeds 2^31-1 at byte offset " + std::to_string(at),
                    std::to_string(at));
      }
      e = value.get_ui();
    }
    const std::uint64_t total = m.exponents[*index] + e;
    if (total > kMaxExponent)
      throw Error(ErrorCode::Overflow, "exponent of '" + name + "' exceeds 2^31-1", name);
    m.exponents[*index] = static_cast<Exponent>(total);
  }

  std::string_view text_;
  const VariableWeighting& ring_;
  std::size_t pos_ = 0;
};

std::string factors(const Monomial& m, const VariableWeighting& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring[i].name;
    if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
  }
  return s;
}

}  // namespace

GradedPolynomial parse_polynomial(std::string_view text, const VariableWeighting& ring) {
  return PolynomialParser(text, ring).parse();
}

Monomial parse_monomial(std::string_view text, const VariableWeighting& ring) {
  const GradedPolynomial p = parse_polynomial(text, ring);
  if (p.terms().size() != 1 || p.terms().front().coefficient != 1)
    throw Error(ErrorCode::InvalidInput, "expected a single monomial, got '" + std::string(text) + "'");
  return p.terms().front().monomial;
}

std::string format_monomial(const Monomial& m, const VariableWeighting& ring) {
  const std::string s = factors(m, ring);
  return s.empty() ? "1" : s;
}

std::string format_polynomial(const GradedPolynomial& p, const VariableWeighting& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = abs(t.coefficient);
    const std::string f = factors(t.monomial, ring);
    if (f.empty()) out += magnitude.get_str();
    else if (magnitude == 1) out += f;
    else out += magnitude.get_str() + "*" + f;
  }
  return out;
}

}  // namespace torusbb
