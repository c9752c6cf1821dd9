#include <algorithm>

#include "genform/error.hpp"
#include "genform/exterior.hpp"

namespace genform {

namespace {

// Sign of the permutation sorting the concatenation I ++ J of two increasing sets,
// or 0 when they overlap.
int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& merged) {
  merged.clear();
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<int>(a.size() - i);
      merged.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

bool in_range(int degree, int n) { return degree >= 0 && degree <= n; }

}  // namespace

// ---------------------------------------------------------------------------
// OrdinaryForm

OrdinaryForm OrdinaryForm::zero(ChartRef chart, int degree) { return OrdinaryForm(std::move(chart), degree); }

OrdinaryForm OrdinaryForm::scalar(const ScalarField& f) {
  OrdinaryForm out(f.chart(), 0);
  out.accumulate({}, f);
  return out;
}

OrdinaryForm OrdinaryForm::basis(const ScalarField& coefficient, std::vector<int> indices) {
  const int n = coefficient.dimension();
  for (int i : indices)
    if (i < 0 || i >= n) throw Error(ErrorCode::index_out_of_range, "basis index " + std::to_string(i) + " out of range");
  OrdinaryForm out(coefficient.chart(), static_cast<int>(indices.size()));
  // Insertion sort, counting transpositions for the parity sign.
  int swaps = 0;
  for (std::size_t i = 1; i < indices.size(); ++i)
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      ++swaps;
    }
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) return out;
  out.accumulate(indices, swaps % 2 == 0 ? coefficient : -coefficient);
  return out;
}

void OrdinaryForm::accumulate(const IndexSet& key, const ScalarField& value) {
  if (value.is_zero()) return;
  require_same_chart(chart_, value.chart(), "form");
  auto it = components_.find(key);
  if (it == components_.end()) {
    components_.emplace(key, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) components_.erase(it);
}

ScalarField OrdinaryForm::component(const IndexSet& key) const {
  auto it = components_.find(key);
  return it == components_.end() ? ScalarField::zero(chart_) : it->second;
}

ScalarField OrdinaryForm::as_scalar() const {
  if (degree_ != 0 && !is_zero())
    throw Error(ErrorCode::degree_mismatch, "expected a 0-form, got a " + std::to_string(degree_) + "-form");
  return component({});
}

OrdinaryForm OrdinaryForm::operator-() const {
  OrdinaryForm out = *this;
  for (auto& [key, f] : out.components_) f = -f;
  return out;
}

OrdinaryForm& OrdinaryForm::operator+=(const OrdinaryForm& other) {
  require_same_chart(chart_, other.chart_, "add");
  if (other.is_zero()) return *this;
  if (is_zero()) {
    degree_ = other.degree_;
  } else if (degree_ != other.degree_) {
    throw Error(ErrorCode::degree_mismatch, "cannot add a " + std::to_string(degree_) + "-form and a " +
                                                std::to_string(other.degree_) + "-form");
  }
  for (const auto& [key, f] : other.components_) accumulate(key, f);
  return *this;
}

OrdinaryForm& OrdinaryForm::operator-=(const OrdinaryForm& other) { return *this += -other; }

OrdinaryForm& OrdinaryForm::operator*=(const ScalarField& f) {
  require_same_chart(chart_, f.chart(), "scale");
  for (auto it = components_.begin(); it != components_.end();) {
    it->second *= f;
    it = it->second.is_zero() ? components_.erase(it) : std::next(it);
  }
  return *this;
}

OrdinaryForm& OrdinaryForm::operator*=(const Rational& q) {
  if (sgn(q) == 0) components_.clear();
  for (auto& [key, f] : components_) f *= q;
  return *this;
}

bool operator==(const OrdinaryForm& a, const OrdinaryForm& b) {
  if (!same_chart(a.chart_, b.chart_)) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.degree_ == b.degree_ && a.components_ == b.components_;
}

OrdinaryForm wedge(const OrdinaryForm& a, const OrdinaryForm& b) {
  require_same_chart(a.chart(), b.chart(), "wedge");
  OrdinaryForm out(a.chart(), a.degree() + b.degree());
  if (!in_range(out.degree(), a.dimension())) return out;
  IndexSet merged;
  for (const auto& [ka, fa] : a.components()) {
    for (const auto& [kb, fb] : b.components()) {
      const int sign = merge_sign(ka, kb, merged);
      if (sign == 0) continue;
      ScalarField product = fa * fb;
      out.accumulate(merged, sign > 0 ? product : -product);
    }
  }
  return out;
}

OrdinaryForm d(const OrdinaryForm& a) {
  OrdinaryForm out(a.chart(), a.degree() + 1);
  const int n = a.dimension();
  if (!in_range(out.degree(), n)) return out;
  IndexSet key;
  for (const auto& [k, f] : a.components()) {
    for (int i = 0; i < n; ++i) {
      // dx_i ^ dx_I: sign counts the entries of I smaller than i.
      auto pos = std::lower_bound(k.begin(), k.end(), i);
      if (pos != k.end() && *pos == i) continue;
      ScalarField df = diff(f, i);
      if (df.is_zero()) continue;
      key.assign(k.begin(), pos);
      key.push_back(i);
      key.insert(key.end(), pos, k.end());
      out.accumulate(key, (pos - k.begin()) % 2 == 0 ? df : -df);
    }
  }
  return out;
}

OrdinaryForm contract(const VectorField& v, const OrdinaryForm& a) {
  require_same_chart(v.chart(), a.chart(), "contract");
  OrdinaryForm out(a.chart(), a.degree() - 1);
  if (a.degree() <= 0) return out;
  IndexSet key;
  for (const auto& [k, f] : a.components()) {
    for (std::size_t j = 0; j < k.size(); ++j) {
      const ScalarField& vj = v[k[j]];
      if (vj.is_zero()) continue;
      key.assign(k.begin(), k.end());
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(j));
      ScalarField term = f * vj;
      out.accumulate(key, j % 2 == 0 ? term : -term);
    }
  }
  return out;
}

OrdinaryForm lie(const VectorField& v, const OrdinaryForm& a) {
  return contract(v, d(a)) + d(contract(v, a));
}

// ---------------------------------------------------------------------------
// VectorField

VectorField VectorField::zero(ChartRef chart) {
  std::vector<ScalarField> components(static_cast<std::size_t>(chart->dimension()), ScalarField::zero(chart));
  return VectorField(std::move(chart), std::move(components));
}

VectorField VectorField::basis(ChartRef chart, int index) {
  VectorField v = zero(chart);
  v.components_.at(static_cast<std::size_t>(index)) = ScalarField::constant(chart, 1);
  return v;
}

VectorField VectorField::from_components(ChartRef chart, std::vector<ScalarField> components) {
  if (components.size() != static_cast<std::size_t>(chart->dimension()))
    throw Error(ErrorCode::chart_mismatch, "vector field needs " + std::to_string(chart->dimension()) + " components");
  for (const auto& c : components) require_same_chart(chart, c.chart(), "vector field");
  return VectorField(std::move(chart), std::move(components));
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const ScalarField& f) { return f.is_zero(); });
}

VectorField VectorField::operator-() const {
  VectorField out = *this;
  for (auto& c : out.components_) c = -c;
  return out;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  require_same_chart(chart_, other.chart_, "add");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  require_same_chart(chart_, other.chart_, "subtract");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

VectorField& VectorField::operator*=(const ScalarField& f) {
  require_same_chart(chart_, f.chart(), "scale");
  for (auto& c : components_) c *= f;
  return *this;
}

VectorField& VectorField::operator*=(const Rational& q) {
  for (auto& c : components_) c *= q;
  return *this;
}

bool operator==(const VectorField& a, const VectorField& b) {
  return same_chart(a.chart_, b.chart_) && a.components_ == b.components_;
}

ScalarField apply(const VectorField& v, const ScalarField& f) {
  require_same_chart(v.chart(), f.chart(), "apply");
  ScalarField out = ScalarField::zero(f.chart());
  for (int i = 0; i < v.dimension(); ++i)
    if (!v[i].is_zero()) out += v[i] * diff(f, i);
  return out;
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  require_same_chart(v.chart(), w.chart(), "bracket");
  std::vector<ScalarField> out;
  out.reserve(static_cast<std::size_t>(v.dimension()));
  for (int i = 0; i < v.dimension(); ++i) out.push_back(apply(v, w[i]) - apply(w, v[i]));
  return VectorField::from_components(v.chart(), std::move(out));
}

}  // namespace genform
