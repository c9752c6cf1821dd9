#pragma once

#include "genform/generalized.hpp"
#include "genform/harness/generator.hpp"

namespace genform::testing {

// Coordinates and basis objects on a chart x, y (, z, w).
struct Plane {
  explicit Plane(Rational k = 0, int n = 2) : chart(make_chart(default_coordinates(n), k)) {}

  ScalarField c(const Rational& q) const { return ScalarField::constant(chart, q); }
  ScalarField x() const { return ScalarField::coordinate(chart, 0); }
  ScalarField y() const { return ScalarField::coordinate(chart, 1); }
  OrdinaryForm scalar(const ScalarField& f) const { return OrdinaryForm::scalar(f); }
  OrdinaryForm dx(const ScalarField& f) const { return OrdinaryForm::basis(f, {0}); }
  OrdinaryForm dy(const ScalarField& f) const { return OrdinaryForm::basis(f, {1}); }
  OrdinaryForm dxdy(const ScalarField& f) const { return OrdinaryForm::basis(f, {0, 1}); }
  OrdinaryForm zero(int degree) const { return OrdinaryForm::zero(chart, degree); }
  // f d/dx + g d/dy
  VectorField vec(const ScalarField& f, const ScalarField& g) const { return VectorField::from_components(chart, {f, g}); }

  ChartRef chart;
};

inline harness::GenConfig config(std::uint64_t seed, int n, harness::KMode k = harness::KMode::random) {
  harness::GenConfig cfg;
  cfg.seed = seed;
  cfg.dimension = n;
  cfg.k.mode = k;
  return cfg;
}

}  // namespace genform::testing
