#pragma once

#include <map>
#include <span>
#include <vector>

#include "genform/scalar_field.hpp"

namespace genform {

class VectorField;

// Strictly increasing list of coordinate indices naming the basis form dx_I.
using IndexSet = std::vector<int>;

// Ordinary differential form of a single degree on one chart.
//
// Components are keyed by strictly increasing index sets and never hold a zero
// polynomial. Forms of degree < 0 or > n are representable and always zero;
// zero forms of different degrees compare equal.
class OrdinaryForm {
 public:
  using Components = std::map<IndexSet, ScalarField>;

  static OrdinaryForm zero(ChartRef chart, int degree);
  static OrdinaryForm scalar(const ScalarField& f);
  // coefficient * dx_{i1} ^ ... ^ dx_{ip}; indices in any order, repeated indices give zero.
  static OrdinaryForm basis(const ScalarField& coefficient, std::vector<int> indices);

  const ChartRef& chart() const { return chart_; }
  int dimension() const { return chart_->dimension(); }
  int degree() const { return degree_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  // Coefficient of dx_I (zero when absent). `key` must be strictly increasing.
  ScalarField component(const IndexSet& key) const;
  // The polynomial of a degree-0 form.
  ScalarField as_scalar() const;

  OrdinaryForm operator-() const;
  OrdinaryForm& operator+=(const OrdinaryForm& other);
  OrdinaryForm& operator-=(const OrdinaryForm& other);
  OrdinaryForm& operator*=(const ScalarField& f);
  OrdinaryForm& operator*=(const Rational& q);

  friend OrdinaryForm operator+(OrdinaryForm a, const OrdinaryForm& b) { return a += b; }
  friend OrdinaryForm operator-(OrdinaryForm a, const OrdinaryForm& b) { return a -= b; }
  friend OrdinaryForm operator*(const ScalarField& f, OrdinaryForm a) { return a *= f; }
  friend OrdinaryForm operator*(const Rational& q, OrdinaryForm a) { return a *= q; }

  friend bool operator==(const OrdinaryForm& a, const OrdinaryForm& b);

 private:
  OrdinaryForm(ChartRef chart, int degree) : chart_(std::move(chart)), degree_(degree) {}

  void accumulate(const IndexSet& key, const ScalarField& value);

  friend OrdinaryForm wedge(const OrdinaryForm&, const OrdinaryForm&);
  friend OrdinaryForm d(const OrdinaryForm&);
  friend class VectorField;
  friend OrdinaryForm contract(const VectorField&, const OrdinaryForm&);

  ChartRef chart_;
  int degree_;
  Components components_;
};

// Vector field sum_i v^i d/dx_i with one polynomial component per coordinate.
class VectorField {
 public:
  static VectorField zero(ChartRef chart);
  static VectorField basis(ChartRef chart, int index);
  // Throws Error{chart_mismatch} unless there is one component per coordinate, all on `chart`.
  static VectorField from_components(ChartRef chart, std::vector<ScalarField> components);

  const ChartRef& chart() const { return chart_; }
  int dimension() const { return chart_->dimension(); }
  const ScalarField& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  std::span<const ScalarField> components() const { return components_; }
  bool is_zero() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(const ScalarField& f);
  VectorField& operator*=(const Rational& q);

  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const ScalarField& f, VectorField v) { return v *= f; }
  friend VectorField operator*(const Rational& q, VectorField v) { return v *= q; }

  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  VectorField(ChartRef chart, std::vector<ScalarField> components)
      : chart_(std::move(chart)), components_(std::move(components)) {}

  ChartRef chart_;
  std::vector<ScalarField> components_;
};

OrdinaryForm wedge(const OrdinaryForm& a, const OrdinaryForm& b);

// Ordinary exterior derivative.
OrdinaryForm d(const OrdinaryForm& a);

// Interior product i_v; lowers degree by one.
OrdinaryForm contract(const VectorField& v, const OrdinaryForm& a);

// Ordinary Lie derivative via Cartan's formula, i_v d a + d i_v a.
OrdinaryForm lie(const VectorField& v, const OrdinaryForm& a);

// Directional derivative v(f) = sum_i v^i d_i f.
ScalarField apply(const VectorField& v, const ScalarField& f);

// Lie bracket [v, w].
VectorField bracket(const VectorField& v, const VectorField& w);

}  // namespace genform
