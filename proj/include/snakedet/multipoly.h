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

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients, and Laurent expressions with monomial denominators.

#ifndef SNAKEDET_MULTIPOLY_H_
#define SNAKEDET_MULTIPOLY_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snakedet {

using Integer = mpz_class;
using VarId = std::uint32_t;

// Process-wide variable registry. Interning is thread-safe; ids are dense and
// assigned in first-use order.
VarId Var(std::string_view name);
const std::string& VarName(VarId id);

// Orders names so that "x2" < "x10": digit runs compare numerically.
bool NaturalLess(std::string_view a, std::string_view b);

class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  // Zero exponents are dropped and repeated variables merged.
  explicit Monomial(std::vector<Factor> factors);

  static Monomial Of(VarId var, std::uint32_t exponent = 1);

  // Sorted by variable id, no zero exponents.
  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t Exponent(VarId var) const;
  std::uint32_t Degree() const;
  bool IsOne() const { return factors_.empty(); }

  bool Divides(const Monomial& other) const;
  // Requires divisor.Divides(*this).
  Monomial Quotient(const Monomial& divisor) const;

  static Monomial Gcd(const Monomial& a, const Monomial& b);
  static Monomial Lcm(const Monomial& a, const Monomial& b);

  // "x1^2*x6"; the unit monomial prints as "1".
  std::string ToString() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order on variable ids; the order used for exact
// division and for internal term storage.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexLess>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT: integers promote implicitly
  explicit Polynomial(const Integer& constant);

  static Polynomial Variable(VarId var);
  static Polynomial Variable(std::string_view name);
  static Polynomial Term(const Integer& coeff, const Monomial& monomial);

  // Parses the text form written by ToString, e.g. "x4^2*x6 - 3*x1 + 2".
  static Polynomial Parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Grlex-largest monomial. Requires !IsZero().
  const Monomial& LeadingMonomial() const;
  const Integer& LeadingCoefficient() const;

  // Largest monomial dividing every term (1 for the zero polynomial).
  Monomial MonomialContent() const;
  // Requires m to divide every term.
  Polynomial DivideByMonomial(const Monomial& m) const;

  Polynomial Substitute(const std::map<VarId, Polynomial>& values) const;

  // Terms ordered graded-lex descending with variables compared by name,
  // independent of registration order. ToString and the JSON form use it.
  std::vector<std::pair<Monomial, Integer>> TermsInPrintOrder() const;
  std::string ToString() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Monomial& m);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Monomial& m) {
    return a *= m;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void AddTerm(const Monomial& m, const Integer& c);

  TermMap terms_;
};

// Quotient q with q * divisor == dividend, by leading-term division under
// grlex. Throws Error(kNotDivisible) when no exact quotient exists.
Polynomial ExactDivide(const Polynomial& dividend, const Polynomial& divisor);

// Value at all variables = 1, i.e. the sum of coefficients.
Integer EvalOnes(const Polynomial& p);

// numerator / denominator with the common monomial factor cancelled.
class LaurentExpr {
 public:
  LaurentExpr() = default;
  LaurentExpr(Polynomial numerator, Monomial denominator = {});  // NOLINT

  // "(x2 + 1)/x1", or just the numerator when the denominator is 1.
  static LaurentExpr Parse(std::string_view text);

  const Polynomial& numerator() const { return numerator_; }
  const Monomial& denominator() const { return denominator_; }
  bool IsZero() const { return numerator_.IsZero(); }

  std::string ToString() const;

  // Exact quotient. The result must again have a monomial denominator;
  // otherwise throws Error(kNotDivisible).
  LaurentExpr DivideBy(const LaurentExpr& divisor) const;

  friend LaurentExpr operator+(const LaurentExpr& a, const LaurentExpr& b);
  friend LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b);
  // Cross-multiplied equality.
  friend bool operator==(const LaurentExpr& a, const LaurentExpr& b);

 private:
  Polynomial numerator_;
  Monomial denominator_;
};

}  // namespace snakedet

#endif  // SNAKEDET_MULTIPOLY_H_
