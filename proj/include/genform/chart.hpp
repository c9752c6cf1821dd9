#pragma once

#include <memory>
#include <string>
#include <vector>

#include "genform/rational.hpp"

namespace genform {

// A single coordinate chart of R^n together with the deformation constant k.
struct Chart {
  std::vector<std::string> coordinates;
  Rational k;

  int dimension() const { return static_cast<int>(coordinates.size()); }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.coordinates == b.coordinates && a.k == b.k;
  }
};

using ChartRef = std::shared_ptr<const Chart>;

// Validates names (non-empty, pairwise distinct, at least one) and builds a shared chart.
ChartRef make_chart(std::vector<std::string> coordinates, Rational k = 0);

// Default coordinate names: x, y, z, w for n <= 4, otherwise x1..xn.
std::vector<std::string> default_coordinates(int n);

bool same_chart(const ChartRef& a, const ChartRef& b);

// Throws Error{chart_mismatch} unless both refer to equal charts.
void require_same_chart(const ChartRef& a, const ChartRef& b, const char* op);

}  // namespace genform
