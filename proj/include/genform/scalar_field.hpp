#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "genform/chart.hpp"
#include "genform/rational.hpp"

namespace genform {

using Exponents = std::vector<std::uint32_t>;

// Graded order used for the canonical term list: lower total degree first, then
// larger powers of earlier coordinates first (x^2, x*y, y^2).
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact polynomial in the chart coordinates with rational coefficients.
//
// Terms are kept sorted by GradedOrder with no duplicate exponent vectors and no
// zero coefficients, so equality is a structural comparison. Values are immutable
// once built; all arithmetic returns fresh objects.
class ScalarField {
 public:
  struct Term {
    Exponents exponents;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  static ScalarField zero(ChartRef chart);
  static ScalarField constant(ChartRef chart, const Rational& value);
  static ScalarField coordinate(ChartRef chart, int index);
  static ScalarField monomial(ChartRef chart, Exponents exponents, const Rational& coefficient);

  // Merges duplicate exponent vectors and drops zero coefficients. Throws
  // Error{chart_mismatch} if an exponent vector does not have one entry per coordinate.
  static ScalarField normalize(ChartRef chart, std::vector<Term> terms);

  const ChartRef& chart() const { return chart_; }
  int dimension() const { return chart_->dimension(); }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Rational constant_term() const;
  int total_degree() const;

  ScalarField operator-() const;
  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(const ScalarField& other);
  ScalarField& operator*=(const Rational& factor);

  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
  friend ScalarField operator*(ScalarField a, const Rational& q) { return a *= q; }
  friend ScalarField operator*(const Rational& q, ScalarField a) { return a *= q; }

  friend bool operator==(const ScalarField& a, const ScalarField& b);

 private:
  ScalarField(ChartRef chart, std::vector<Term> sorted_terms)
      : chart_(std::move(chart)), terms_(std::move(sorted_terms)) {}

  ChartRef chart_;
  std::vector<Term> terms_;
};

ScalarField pow(const ScalarField& base, unsigned exponent);

// Exact partial derivative along coordinate `coord`; throws Error{index_out_of_range}.
ScalarField diff(const ScalarField& p, int coord);

// Exact value at a point with one rational per coordinate; throws Error{length_mismatch}.
Rational evaluate(const ScalarField& p, std::span<const Rational> point);

}  // namespace genform
