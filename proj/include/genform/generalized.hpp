#pragma once

#include "genform/exterior.hpp"

namespace genform {

// Generalized p-form: the pair (alpha_p, alpha_{p+1}) of an ordinary p-form and
// its (p+1)-form companion. The degree tag may be -1 (ordinary part forced zero)
// or n (companion forced zero); tags outside [-1, n] can only hold zero.
class GeneralizedForm {
 public:
  // Throws Error{degree_mismatch} unless the parts have degrees p and p+1 (zero parts
  // of any degree are accepted and re-tagged).
  GeneralizedForm(int degree, OrdinaryForm ordinary, OrdinaryForm companion);

  static GeneralizedForm zero(ChartRef chart, int degree);
  // Unit of the wedge algebra, (1, 0).
  static GeneralizedForm one(ChartRef chart);

  int degree() const { return degree_; }
  const ChartRef& chart() const { return ordinary_.chart(); }
  const OrdinaryForm& ordinary() const { return ordinary_; }
  const OrdinaryForm& companion() const { return companion_; }
  bool is_zero() const { return ordinary_.is_zero() && companion_.is_zero(); }

  GeneralizedForm operator-() const;
  GeneralizedForm& operator+=(const GeneralizedForm& other);
  GeneralizedForm& operator-=(const GeneralizedForm& other);
  // Ordinary scalar multiplication scales both parts.
  GeneralizedForm& operator*=(const ScalarField& mu);
  GeneralizedForm& operator*=(const Rational& q);

  friend GeneralizedForm operator+(GeneralizedForm a, const GeneralizedForm& b) { return a += b; }
  friend GeneralizedForm operator-(GeneralizedForm a, const GeneralizedForm& b) { return a -= b; }
  friend GeneralizedForm operator*(const ScalarField& mu, GeneralizedForm a) { return a *= mu; }
  friend GeneralizedForm operator*(const Rational& q, GeneralizedForm a) { return a *= q; }

  friend bool operator==(const GeneralizedForm& a, const GeneralizedForm& b) {
    return a.ordinary_ == b.ordinary_ && a.companion_ == b.companion_;
  }

 private:
  int degree_;
  OrdinaryForm ordinary_;
  OrdinaryForm companion_;
};

// Generalized vector field V = (v1, v0): an ordinary vector field and a scalar field.
class GeneralizedVector {
 public:
  GeneralizedVector(VectorField field, ScalarField scalar);

  static GeneralizedVector zero(ChartRef chart);

  const ChartRef& chart() const { return field_.chart(); }
  const VectorField& field() const { return field_; }
  const ScalarField& scalar() const { return scalar_; }
  bool is_zero() const { return field_.is_zero() && scalar_.is_zero(); }

  GeneralizedVector operator-() const { return {-field_, -scalar_}; }
  GeneralizedVector& operator+=(const GeneralizedVector& other);
  GeneralizedVector& operator-=(const GeneralizedVector& other);
  GeneralizedVector& operator*=(const ScalarField& mu);
  GeneralizedVector& operator*=(const Rational& q);

  friend GeneralizedVector operator+(GeneralizedVector a, const GeneralizedVector& b) { return a += b; }
  friend GeneralizedVector operator-(GeneralizedVector a, const GeneralizedVector& b) { return a -= b; }
  friend GeneralizedVector operator*(const ScalarField& mu, GeneralizedVector a) { return a *= mu; }
  friend GeneralizedVector operator*(const Rational& q, GeneralizedVector a) { return a *= q; }

  friend bool operator==(const GeneralizedVector&, const GeneralizedVector&) = default;

 private:
  VectorField field_;
  ScalarField scalar_;
};

/// Wedge product of generalized forms,
///   (a_p, a_{p+1}) ^ (b_q, b_{q+1}) = (a_p b_q, a_p b_{q+1} + (-1)^q a_{p+1} b_q).
GeneralizedForm wedge(const GeneralizedForm& a, const GeneralizedForm& b);

/// Deformed exterior derivative with the chart constant k,
///   d(a_p, a_{p+1}) = (d a_p + (-1)^{p+1} k a_{p+1}, d a_{p+1}).
GeneralizedForm d(const GeneralizedForm& a);

/// Generalized scalar multiplication by a generalized 0-form,
///   (a_0, a_1) V = (a_0 v1, a_0 v0 + i_{v1} a_1).
/// Throws Error{degree_mismatch} if `a0` is not of degree 0.
GeneralizedVector scale(const GeneralizedForm& a0, const GeneralizedVector& v);

/// Interior product I_V (a_p, a_{p+1}) = (i_{v1} a_p, i_{v1} a_{p+1} + p (-1)^{p-1} v0 a_p).
GeneralizedForm contract(const GeneralizedVector& v, const GeneralizedForm& a);

/// V + mu W = (v1 + mu w1, v0 + mu w0) for an ordinary scalar field mu.
GeneralizedVector add_scaled(const GeneralizedVector& v, const ScalarField& mu, const GeneralizedVector& w);

/// Uncorrected Lie derivative from Cartan's formula, I_V d a + d I_V a.
GeneralizedForm lie_cartan(const GeneralizedVector& v, const GeneralizedForm& a);

/// Closed form of lie_cartan:
///   (L a_p - p k v0 a_p,
///    L a_{p+1} - (p+1) k v0 a_{p+1} + p (-1)^{p-1} dv0 ^ a_p + (-1)^p v0 d a_p).
GeneralizedForm lie_cartan_expanded(const GeneralizedVector& v, const GeneralizedForm& a);

/// Corrected Lie derivative (L a_p - p k v0 a_p, L a_{p+1} - (p+1) k v0 a_{p+1}).
///
/// Unlike lie_cartan it is a derivation of the wedge product and its commutator
/// with I_W is the contraction along lie(V, W).
GeneralizedForm lie(const GeneralizedVector& v, const GeneralizedForm& a);

/// The corrected derivative built from lie_cartan plus the correction term
/// (-1)^p (0, -v0 d a_p + p dv0 ^ a_p). Agrees with lie().
GeneralizedForm lie_from_cartan(const GeneralizedVector& v, const GeneralizedForm& a);

/// Lie derivative of a generalized vector, ([v1, w1] + k v0 w1, v1(w0)).
/// Not antisymmetric: lie(V, V) = (k v0 v1, v1(v0)).
GeneralizedVector lie(const GeneralizedVector& v, const GeneralizedVector& w);

/// Generalized commutator {V, W} = ([v1, w1], v1(w0) - w1(v0)).
///
/// Antisymmetric, independent of k, and satisfies the Jacobi identity. It differs from
/// lie(V, W) by (k v0 w1, w1(v0)).
GeneralizedVector commutator(const GeneralizedVector& v, const GeneralizedVector& w);

/// Failure of lie_cartan to be compatible with contraction:
///   lie_cartan(V, I_W a) - I_W lie_cartan(V, a) - I_{([v1,w1] + k v0 w1, v1(w0) - w1(v0))} a.
/// A generalized (p-1)-form equal to -(-1)^p (0, L_{v0 w1} a_p).
GeneralizedForm lie_residual(const GeneralizedVector& v, const GeneralizedVector& w, const GeneralizedForm& a);

// Embeds an ordinary form as (alpha, 0) and an ordinary vector as (v, 0).
GeneralizedForm embed(const OrdinaryForm& a);
GeneralizedVector embed(const VectorField& v);

// (-1)^p for any integer p.
inline int parity_sign(int p) { return (p % 2 == 0) ? 1 : -1; }

}  // namespace genform
