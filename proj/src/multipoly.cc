// Copyright 2026 The Snakedet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snakedet/multipoly.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "snakedet/error.h"

namespace snakedet {
namespace {

struct Registry {
  std::mutex mu;
  std::unordered_map<std::string, VarId> ids;
  // deque keeps references returned by VarName stable.
  std::deque<std::string> names;
};

Registry& GlobalRegistry() {
  static Registry* registry = new Registry;
  return *registry;
}

// Name-ordered view of a monomial, used only for printing.
std::vector<std::pair<std::string_view, std::uint32_t>> NamedFactors(
    const Monomial& m) {
  std::vector<std::pair<std::string_view, std::uint32_t>> out;
  out.reserve(m.factors().size());
  for (const auto& [var, exp] : m.factors()) out.emplace_back(VarName(var), exp);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return NaturalLess(a.first, b.first);
  });
  return out;
}

// True when a prints before b: higher degree first, then lex by name.
bool PrintsBefore(const Monomial& a, const Monomial& b) {
  if (a.Degree() != b.Degree()) return a.Degree() > b.Degree();
  auto fa = NamedFactors(a);
  auto fb = NamedFactors(b);
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return NaturalLess(fa[i].first, fb[i].first);
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial ParsePolynomial() {
    Polynomial result;
    SkipSpace();
    bool negative = false;
    if (Peek() == '-') {
      negative = true;
      ++pos_;
    } else if (Peek() == '+') {
      ++pos_;
    }
    while (true) {
      Polynomial term = ParseTerm();
      if (negative) {
        result -= term;
      } else {
        result += term;
      }
      SkipSpace();
      if (Peek() == '+') {
        negative = false;
      } else if (Peek() == '-') {
        negative = true;
      } else {
        break;
      }
      ++pos_;
    }
    return result;
  }

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "cannot parse polynomial \"" +
                                       std::string(text_) + "\": " + what +
                                       " at offset " + std::to_string(pos_));
  }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t pos) { pos_ = pos; }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string ReadDigits() {
    SkipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial ParseTerm() {
    Integer coeff = 1;
    std::vector<Monomial::Factor> factors;
    while (true) {
      char c = Peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Integer(ReadDigits());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          ++pos_;
        }
        VarId var = Var(text_.substr(start, pos_ - start));
        std::uint32_t exp = 1;
        if (Peek() == '^') {
          ++pos_;
          exp = static_cast<std::uint32_t>(std::stoul(ReadDigits()));
        }
        factors.emplace_back(var, exp);
      } else {
        Fail("expected a coefficient or variable");
      }
      if (Peek() != '*') break;
      ++pos_;
    }
    return Polynomial::Term(coeff, Monomial(std::move(factors)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

VarId Var(std::string_view name) {
  Registry& r = GlobalRegistry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.ids.find(std::string(name));
  if (it != r.ids.end()) return it->second;
  VarId id = static_cast<VarId>(r.names.size());
  r.names.emplace_back(name);
  r.ids.emplace(std::string(name), id);
  return id;
}

const std::string& VarName(VarId id) {
  Registry& r = GlobalRegistry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(id);
}

bool NaturalLess(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto is_digit = [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  };
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && is_digit(a[ei])) ++ei;
      while (ej < b.size() && is_digit(b[ej])) ++ej;
      // Strip leading zeros, then longer run is larger.
      std::size_t si = i, sj = j;
      while (si + 1 < ei && a[si] == '0') ++si;
      while (sj + 1 < ej && b[sj] == '0') ++sj;
      std::string_view ra = a.substr(si, ei - si), rb = b.substr(sj, ej - sj);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      if (ei - i != ej - j) return ei - i < ej - j;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [var, exp] : factors) {
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == var) {
      factors_.back().second += exp;
    } else {
      factors_.emplace_back(var, exp);
    }
  }
}

Monomial Monomial::Of(VarId var, std::uint32_t exponent) {
  return Monomial({{var, exponent}});
}

std::uint32_t Monomial::Exponent(VarId var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(),
                             Factor{var, 0});
  return (it != factors_.end() && it->first == var) ? it->second : 0;
}

std::uint32_t Monomial::Degree() const {
  std::uint32_t total = 0;
  for (const auto& f : factors_) total += f.second;
  return total;
}

bool Monomial::Divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& [var, exp] : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first < var) ++j;
    if (j == other.factors_.size() || other.factors_[j].first != var ||
        other.factors_[j].second < exp) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::Quotient(const Monomial& divisor) const {
  Monomial out;
  std::size_t j = 0;
  for (const auto& [var, exp] : factors_) {
    std::uint32_t sub = 0;
    if (j < divisor.factors_.size() && divisor.factors_[j].first == var) {
      sub = divisor.factors_[j++].second;
    }
    if (exp > sub) out.factors_.emplace_back(var, exp - sub);
  }
  return out;
}

Monomial Monomial::Gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].first < b.factors_[j].first) {
      ++i;
    } else if (b.factors_[j].first < a.factors_[i].first) {
      ++j;
    } else {
      out.factors_.emplace_back(
          a.factors_[i].first,
          std::min(a.factors_[i].second, b.factors_[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::Lcm(const Monomial& a, const Monomial& b) {
  std::vector<Factor> merged;
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
      merged.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() ||
               b.factors_[j].first < a.factors_[i].first) {
      merged.push_back(b.factors_[j++]);
    } else {
      merged.emplace_back(a.factors_[i].first,
                          std::max(a.factors_[i].second, b.factors_[j].second));
      ++i;
      ++j;
    }
  }
  Monomial out;
  out.factors_ = std::move(merged);
  return out;
}

std::string Monomial::ToString() const {
  if (IsOne()) return "1";
  std::string out;
  for (const auto& [name, exp] : NamedFactors(*this)) {
    if (!out.empty()) out += '*';
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
      f.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() ||
               b.factors_[j].first < a.factors_[i].first) {
      f.push_back(b.factors_[j++]);
    } else {
      f.emplace_back(a.factors_[i].first,
                     a.factors_[i].second + b.factors_[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint32_t da = a.Degree(), db = b.Degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) {
      // The monomial containing the smaller variable is larger.
      return fb[j].first < fa[i].first;
    }
    if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
    ++i;
    ++j;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial(), Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial Polynomial::Variable(VarId var) {
  return Term(1, Monomial::Of(var));
}

Polynomial Polynomial::Variable(std::string_view name) {
  return Variable(Var(name));
}

Polynomial Polynomial::Term(const Integer& coeff, const Monomial& monomial) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(monomial, coeff);
  return p;
}

Polynomial Polynomial::Parse(std::string_view text) {
  Parser parser(text);
  Polynomial p = parser.ParsePolynomial();
  if (!parser.AtEnd()) parser.Fail("trailing characters");
  return p;
}

const Monomial& Polynomial::LeadingMonomial() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no terms");
  }
  return terms_.rbegin()->first;
}

const Integer& Polynomial::LeadingCoefficient() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no terms");
  }
  return terms_.rbegin()->second;
}

Monomial Polynomial::MonomialContent() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    if (g.IsOne()) break;
    g = Monomial::Gcd(g, m);
  }
  return g;
}

Polynomial Polynomial::DivideByMonomial(const Monomial& m) const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) {
    if (!m.Divides(mono)) {
      throw Error(ErrorCode::kNotDivisible,
                  m.ToString() + " does not divide " + mono.ToString());
    }
    out.terms_.emplace_hint(out.terms_.end(), mono.Quotient(m), c);
  }
  return out;
}

Polynomial Polynomial::Substitute(
    const std::map<VarId, Polynomial>& values) const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) {
    Polynomial term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [var, exp] : mono.factors()) {
      auto it = values.find(var);
      if (it == values.end()) {
        kept.emplace_back(var, exp);
        continue;
      }
      for (std::uint32_t k = 0; k < exp; ++k) term *= it->second;
    }
    term *= Monomial(std::move(kept));
    out += term;
  }
  return out;
}

std::vector<std::pair<Monomial, Integer>> Polynomial::TermsInPrintOrder()
    const {
  std::vector<std::pair<Monomial, Integer>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return PrintsBefore(a.first, b.first);
  });
  return out;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : TermsInPrintOrder()) {
    bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Integer magnitude = abs(c);
    if (mono.IsOne()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += mono.ToString();
    }
  }
  return out;
}

void Polynomial::AddTerm(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) AddTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) AddTerm(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Monomial& m) {
  if (m.IsOne()) return *this;
  TermMap shifted;
  // Multiplying by a monomial preserves grlex order.
  for (const auto& [mono, c] : terms_) {
    shifted.emplace_hint(shifted.end(), mono * m, c);
  }
  terms_ = std::move(shifted);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.IsZero() || b.IsZero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.AddTerm(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial ExactDivide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  }
  const Monomial& lead_m = divisor.LeadingMonomial();
  const Integer& lead_c = divisor.LeadingCoefficient();
  Polynomial quotient;
  Polynomial remainder = dividend;
  while (!remainder.IsZero()) {
    const Monomial& rm = remainder.LeadingMonomial();
    const Integer& rc = remainder.LeadingCoefficient();
    if (!lead_m.Divides(rm) || !mpz_divisible_p(rc.get_mpz_t(),
                                                 lead_c.get_mpz_t())) {
      throw Error(ErrorCode::kNotDivisible, "(" + dividend.ToString() +
                                                ") is not divisible by (" +
                                                divisor.ToString() + ")");
    }
    Integer qc = rc / lead_c;
    Monomial qm = rm.Quotient(lead_m);
    Polynomial step = Polynomial::Term(qc, qm);
    remainder -= divisor * step;
    quotient += step;
  }
  return quotient;
}

Integer EvalOnes(const Polynomial& p) {
  Integer total = 0;
  for (const auto& [m, c] : p.terms()) total += c;
  return total;
}

// ---------------------------------------------------------------------------
// LaurentExpr

LaurentExpr::LaurentExpr(Polynomial numerator, Monomial denominator) {
  if (numerator.IsZero()) return;
  Monomial common = Monomial::Gcd(numerator.MonomialContent(), denominator);
  if (common.IsOne()) {
    numerator_ = std::move(numerator);
    denominator_ = std::move(denominator);
  } else {
    numerator_ = numerator.DivideByMonomial(common);
    denominator_ = denominator.Quotient(common);
  }
}

LaurentExpr LaurentExpr::Parse(std::string_view text) {
  Parser parser(text);
  Polynomial num;
  if (parser.Peek() == '(') {
    parser.Expect('(');
    num = parser.ParsePolynomial();
    parser.Expect(')');
  } else {
    // A bare numerator may itself be a single term followed by "/den".
    num = parser.ParsePolynomial();
  }
  Monomial den;
  if (parser.Peek() == '/') {
    parser.Expect('/');
    std::size_t start = parser.pos();
    Polynomial d;
    if (parser.Peek() == '(') {
      parser.Expect('(');
      d = parser.ParsePolynomial();
      parser.Expect(')');
    } else {
      d = parser.ParsePolynomial();
    }
    if (d.size() != 1 || d.terms().begin()->second != 1) {
      parser.set_pos(start);
      parser.Fail("denominator must be a monomial");
    }
    den = d.terms().begin()->first;
  }
  if (!parser.AtEnd()) parser.Fail("trailing characters");
  return LaurentExpr(std::move(num), std::move(den));
}

std::string LaurentExpr::ToString() const {
  std::string num = numerator_.ToString();
  if (denominator_.IsOne()) return num;
  if (numerator_.size() > 1) num = "(" + num + ")";
  return num + "/" + denominator_.ToString();
}

LaurentExpr LaurentExpr::DivideBy(const LaurentExpr& divisor) const {
  if (divisor.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "division by zero");
  }
  // divisor = c * core / m with c a monomial and core free of monomial
  // factors; then this / divisor = (num * m / core) / (den * c).
  Monomial content = divisor.numerator_.MonomialContent();
  Polynomial core = divisor.numerator_.DivideByMonomial(content);
  Polynomial scaled = numerator_ * divisor.denominator_;
  Polynomial quotient = ExactDivide(scaled, core);
  return LaurentExpr(std::move(quotient), denominator_ * content);
}

LaurentExpr operator+(const LaurentExpr& a, const LaurentExpr& b) {
  if (a.IsZero()) return b;
  if (b.IsZero()) return a;
  Monomial common = Monomial::Lcm(a.denominator_, b.denominator_);
  Polynomial sum = a.numerator_ * common.Quotient(a.denominator_);
  sum += b.numerator_ * common.Quotient(b.denominator_);
  return LaurentExpr(std::move(sum), std::move(common));
}

LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b) {
  return LaurentExpr(a.numerator_ * b.numerator_,
                     a.denominator_ * b.denominator_);
}

bool operator==(const LaurentExpr& a, const LaurentExpr& b) {
  return a.numerator_ * b.denominator_ == b.numerator_ * a.denominator_;
}

}  // namespace snakedet
