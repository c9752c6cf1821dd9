#include "genform/generalized.hpp"

#include "genform/error.hpp"

namespace genform {

namespace {

OrdinaryForm retag(const OrdinaryForm& f, int degree, const char* what, int p) {
  if (f.is_zero()) return OrdinaryForm::zero(f.chart(), degree);
  if (f.degree() != degree)
    throw Error(ErrorCode::degree_mismatch, std::string("generalized ") + std::to_string(p) + "-form needs a " +
                                                std::to_string(degree) + "-form as " + what + ", got a " +
                                                std::to_string(f.degree()) + "-form");
  return f;
}

OrdinaryForm times(const ScalarField& f, const OrdinaryForm& a) { return f * a; }

OrdinaryForm dscalar(const ScalarField& f) { return d(OrdinaryForm::scalar(f)); }

}  // namespace

// ---------------------------------------------------------------------------
// GeneralizedForm

GeneralizedForm::GeneralizedForm(int degree, OrdinaryForm ordinary, OrdinaryForm companion)
    : degree_(degree),
      ordinary_(retag(ordinary, degree, "ordinary part", degree)),
      companion_(retag(companion, degree + 1, "companion", degree)) {
  require_same_chart(ordinary_.chart(), companion_.chart(), "generalized form");
}

GeneralizedForm GeneralizedForm::zero(ChartRef chart, int degree) {
  return {degree, OrdinaryForm::zero(chart, degree), OrdinaryForm::zero(chart, degree + 1)};
}

GeneralizedForm GeneralizedForm::one(ChartRef chart) {
  return {0, OrdinaryForm::scalar(ScalarField::constant(chart, 1)), OrdinaryForm::zero(chart, 1)};
}

GeneralizedForm GeneralizedForm::operator-() const { return {degree_, -ordinary_, -companion_}; }

GeneralizedForm& GeneralizedForm::operator+=(const GeneralizedForm& other) {
  require_same_chart(chart(), other.chart(), "add");
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (degree_ != other.degree_)
    throw Error(ErrorCode::degree_mismatch, "cannot add generalized forms of degrees " + std::to_string(degree_) +
                                                " and " + std::to_string(other.degree_));
  ordinary_ += other.ordinary_;
  companion_ += other.companion_;
  return *this;
}

GeneralizedForm& GeneralizedForm::operator-=(const GeneralizedForm& other) { return *this += -other; }

GeneralizedForm& GeneralizedForm::operator*=(const ScalarField& mu) {
  ordinary_ *= mu;
  companion_ *= mu;
  return *this;
}

GeneralizedForm& GeneralizedForm::operator*=(const Rational& q) {
  ordinary_ *= q;
  companion_ *= q;
  return *this;
}

// ---------------------------------------------------------------------------
// GeneralizedVector

GeneralizedVector::GeneralizedVector(VectorField field, ScalarField scalar)
    : field_(std::move(field)), scalar_(std::move(scalar)) {
  require_same_chart(field_.chart(), scalar_.chart(), "generalized vector");
}

GeneralizedVector GeneralizedVector::zero(ChartRef chart) {
  return {VectorField::zero(chart), ScalarField::zero(chart)};
}

GeneralizedVector& GeneralizedVector::operator+=(const GeneralizedVector& other) {
  field_ += other.field_;
  scalar_ += other.scalar_;
  return *this;
}

GeneralizedVector& GeneralizedVector::operator-=(const GeneralizedVector& other) {
  field_ -= other.field_;
  scalar_ -= other.scalar_;
  return *this;
}

GeneralizedVector& GeneralizedVector::operator*=(const ScalarField& mu) {
  field_ *= mu;
  scalar_ *= mu;
  return *this;
}

GeneralizedVector& GeneralizedVector::operator*=(const Rational& q) {
  field_ *= q;
  scalar_ *= q;
  return *this;
}

// ---------------------------------------------------------------------------
// Operations

GeneralizedForm wedge(const GeneralizedForm& a, const GeneralizedForm& b) {
  require_same_chart(a.chart(), b.chart(), "wedge");
  const int q = b.degree();
  OrdinaryForm first = wedge(a.ordinary(), b.ordinary());
  OrdinaryForm second = wedge(a.ordinary(), b.companion());
  const OrdinaryForm cross = wedge(a.companion(), b.ordinary());
  second += parity_sign(q) > 0 ? cross : -cross;
  return {a.degree() + q, std::move(first), std::move(second)};
}

GeneralizedForm d(const GeneralizedForm& a) {
  const int p = a.degree();
  const Rational& k = a.chart()->k;
  OrdinaryForm first = d(a.ordinary());
  first += (parity_sign(p + 1) * k) * a.companion();
  return {p + 1, std::move(first), d(a.companion())};
}

GeneralizedVector scale(const GeneralizedForm& a0, const GeneralizedVector& v) {
  require_same_chart(a0.chart(), v.chart(), "scale");
  if (a0.degree() != 0)
    throw Error(ErrorCode::degree_mismatch,
                "generalized scalar multiplication needs a generalized 0-form, got degree " +
                    std::to_string(a0.degree()));
  const ScalarField alpha0 = a0.ordinary().as_scalar();
  return {alpha0 * v.field(), alpha0 * v.scalar() + contract(v.field(), a0.companion()).as_scalar()};
}

GeneralizedForm contract(const GeneralizedVector& v, const GeneralizedForm& a) {
  require_same_chart(v.chart(), a.chart(), "contract");
  const int p = a.degree();
  OrdinaryForm second = contract(v.field(), a.companion());
  second += Rational(p * parity_sign(p - 1)) * times(v.scalar(), a.ordinary());
  return {p - 1, contract(v.field(), a.ordinary()), std::move(second)};
}

GeneralizedVector add_scaled(const GeneralizedVector& v, const ScalarField& mu, const GeneralizedVector& w) {
  require_same_chart(v.chart(), w.chart(), "add");
  return v + mu * w;
}

GeneralizedForm lie_cartan(const GeneralizedVector& v, const GeneralizedForm& a) {
  return contract(v, d(a)) + d(contract(v, a));
}

GeneralizedForm lie_cartan_expanded(const GeneralizedVector& v, const GeneralizedForm& a) {
  require_same_chart(v.chart(), a.chart(), "lie");
  const int p = a.degree();
  const Rational& k = a.chart()->k;
  const ScalarField& v0 = v.scalar();
  OrdinaryForm first = lie(v.field(), a.ordinary()) - (Rational(p) * k) * times(v0, a.ordinary());
  OrdinaryForm second = lie(v.field(), a.companion()) - (Rational(p + 1) * k) * times(v0, a.companion());
  second += Rational(p * parity_sign(p - 1)) * wedge(dscalar(v0), a.ordinary());
  second += Rational(parity_sign(p)) * times(v0, d(a.ordinary()));
  return {p, std::move(first), std::move(second)};
}

GeneralizedForm lie(const GeneralizedVector& v, const GeneralizedForm& a) {
  require_same_chart(v.chart(), a.chart(), "lie");
  const int p = a.degree();
  const Rational& k = a.chart()->k;
  const ScalarField& v0 = v.scalar();
  OrdinaryForm first = lie(v.field(), a.ordinary()) - (Rational(p) * k) * times(v0, a.ordinary());
  OrdinaryForm second = lie(v.field(), a.companion()) - (Rational(p + 1) * k) * times(v0, a.companion());
  return {p, std::move(first), std::move(second)};
}

GeneralizedForm lie_from_cartan(const GeneralizedVector& v, const GeneralizedForm& a) {
  const int p = a.degree();
  const ScalarField& v0 = v.scalar();
  OrdinaryForm correction = -times(v0, d(a.ordinary()));
  correction += Rational(p) * wedge(dscalar(v0), a.ordinary());
  correction *= Rational(parity_sign(p));
  return lie_cartan(v, a) + GeneralizedForm(p, OrdinaryForm::zero(a.chart(), p), std::move(correction));
}

GeneralizedVector lie(const GeneralizedVector& v, const GeneralizedVector& w) {
  require_same_chart(v.chart(), w.chart(), "lie");
  const Rational& k = v.chart()->k;
  VectorField field = bracket(v.field(), w.field()) + k * (v.scalar() * w.field());
  return {std::move(field), apply(v.field(), w.scalar())};
}

GeneralizedVector commutator(const GeneralizedVector& v, const GeneralizedVector& w) {
  require_same_chart(v.chart(), w.chart(), "commutator");
  return {bracket(v.field(), w.field()), apply(v.field(), w.scalar()) - apply(w.field(), v.scalar())};
}

GeneralizedForm lie_residual(const GeneralizedVector& v, const GeneralizedVector& w, const GeneralizedForm& a) {
  require_same_chart(v.chart(), w.chart(), "lie residual");
  const Rational& k = v.chart()->k;
  const GeneralizedVector u(bracket(v.field(), w.field()) + k * (v.scalar() * w.field()),
                            apply(v.field(), w.scalar()) - apply(w.field(), v.scalar()));
  return lie_cartan(v, contract(w, a)) - contract(w, lie_cartan(v, a)) - contract(u, a);
}

GeneralizedForm embed(const OrdinaryForm& a) {
  return {a.degree(), a, OrdinaryForm::zero(a.chart(), a.degree() + 1)};
}

GeneralizedVector embed(const VectorField& v) { return {v, ScalarField::zero(v.chart())}; }

}  // namespace genform
