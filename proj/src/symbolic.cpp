#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "genform/chart.hpp"
#include "genform/error.hpp"
#include "genform/rational.hpp"
#include "genform/scalar_field.hpp"

namespace genform {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::chart_mismatch: return "chart-mismatch";
    case ErrorCode::degree_mismatch: return "degree-mismatch";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::length_mismatch: return "length-mismatch";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::unknown_identity: return "unknown-identity";
  }
  return "error";
}

// ---------------------------------------------------------------------------
// Rational

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) return std::nullopt;
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

// ---------------------------------------------------------------------------
// Chart

ChartRef make_chart(std::vector<std::string> coordinates, Rational k) {
  if (coordinates.empty()) throw Error(ErrorCode::invalid_argument, "a chart needs at least one coordinate");
  std::set<std::string> seen;
  for (const auto& name : coordinates) {
    if (name.empty()) throw Error(ErrorCode::invalid_argument, "empty coordinate name");
    if (!seen.insert(name).second) throw Error(ErrorCode::invalid_argument, "duplicate coordinate '" + name + "'");
  }
  k.canonicalize();
  return std::make_shared<const Chart>(Chart{std::move(coordinates), std::move(k)});
}

std::vector<std::string> default_coordinates(int n) {
  static const char* const small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return names;
}

bool same_chart(const ChartRef& a, const ChartRef& b) { return a == b || (a && b && *a == *b); }

void require_same_chart(const ChartRef& a, const ChartRef& b, const char* op) {
  if (!same_chart(a, b)) throw Error(ErrorCode::chart_mismatch, std::string(op) + ": operands live on different charts");
}

// ---------------------------------------------------------------------------
// ScalarField

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

using TermMap = std::map<Exponents, Rational, GradedOrder>;

std::vector<ScalarField::Term> flatten(TermMap&& acc) {
  std::vector<ScalarField::Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) out.push_back({e, std::move(c)});
  return out;
}

}  // namespace

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ScalarField ScalarField::zero(ChartRef chart) { return ScalarField(std::move(chart), {}); }

ScalarField ScalarField::constant(ChartRef chart, const Rational& value) {
  const auto n = static_cast<std::size_t>(chart->dimension());
  return monomial(std::move(chart), Exponents(n, 0), value);
}

ScalarField ScalarField::coordinate(ChartRef chart, int index) {
  if (index < 0 || index >= chart->dimension())
    throw Error(ErrorCode::index_out_of_range, "coordinate index " + std::to_string(index) + " out of range");
  Exponents e(static_cast<std::size_t>(chart->dimension()), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(std::move(chart), std::move(e), 1);
}

ScalarField ScalarField::monomial(ChartRef chart, Exponents exponents, const Rational& coefficient) {
  std::vector<Term> terms;
  terms.push_back({std::move(exponents), coefficient});
  return normalize(std::move(chart), std::move(terms));
}

ScalarField ScalarField::normalize(ChartRef chart, std::vector<Term> terms) {
  const auto n = static_cast<std::size_t>(chart->dimension());
  TermMap acc;
  for (auto& t : terms) {
    if (t.exponents.size() != n)
      throw Error(ErrorCode::chart_mismatch, "exponent vector has " + std::to_string(t.exponents.size()) +
                                                 " entries, chart has " + std::to_string(n) + " coordinates");
    t.coefficient.canonicalize();
    auto [it, inserted] = acc.try_emplace(std::move(t.exponents), t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  return ScalarField(std::move(chart), flatten(std::move(acc)));
}

bool ScalarField::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.front().exponents) == 0);
}

Rational ScalarField::constant_term() const {
  if (!terms_.empty() && degree_of(terms_.front().exponents) == 0) return terms_.front().coefficient;
  return 0;
}

int ScalarField::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(degree_of(terms_.back().exponents));
}

ScalarField ScalarField::operator-() const {
  ScalarField out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_chart(chart_, other.chart_, "add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  const GradedOrder less;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && less(a->exponents, b->exponents))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || less(b->exponents, a->exponents)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (sgn(c) != 0) merged.push_back({std::move(a->exponents), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) { return *this += -other; }

ScalarField& ScalarField::operator*=(const ScalarField& other) {
  require_same_chart(chart_, other.chart_, "multiply");
  if (terms_.empty() || other.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  const std::size_t n = static_cast<std::size_t>(dimension());
  TermMap acc;
  Exponents e(n);
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = a.exponents[i] + b.exponents[i];
      Rational c = a.coefficient * b.coefficient;
      auto [it, inserted] = acc.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  terms_ = flatten(std::move(acc));
  return *this;
}

ScalarField& ScalarField::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= factor;
  return *this;
}

bool operator==(const ScalarField& a, const ScalarField& b) {
  return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_;
}

ScalarField pow(const ScalarField& base, unsigned exponent) {
  ScalarField result = ScalarField::constant(base.chart(), 1);
  ScalarField square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

ScalarField diff(const ScalarField& p, int coord) {
  if (coord < 0 || coord >= p.dimension())
    throw Error(ErrorCode::index_out_of_range, "cannot differentiate along coordinate " + std::to_string(coord));
  const auto i = static_cast<std::size_t>(coord);
  std::vector<ScalarField::Term> out;
  for (const auto& t : p.terms()) {
    if (t.exponents[i] == 0) continue;
    ScalarField::Term d{t.exponents, t.coefficient * t.exponents[i]};
    --d.exponents[i];
    out.push_back(std::move(d));
  }
  return ScalarField::normalize(p.chart(), std::move(out));
}

Rational evaluate(const ScalarField& p, std::span<const Rational> point) {
  if (point.size() != static_cast<std::size_t>(p.dimension()))
    throw Error(ErrorCode::length_mismatch, "point has " + std::to_string(point.size()) + " coordinates, chart has " +
                                                std::to_string(p.dimension()));
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational value = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), t.exponents[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), t.exponents[i]);
      value *= power;
    }
    sum += value;
  }
  return sum;
}

}  // namespace genform
