#include "genform/harness/generator.hpp"

#include <algorithm>

#include "genform/error.hpp"

namespace genform::harness {

std::optional<KChoice> KChoice::parse(std::string_view text) {
  if (text == "zero") return KChoice{KMode::zero, 0};
  if (text == "random") return KChoice{KMode::random, 0};
  if (auto q = parse_rational(text)) return KChoice{KMode::fixed, *q};
  return std::nullopt;
}

std::string KChoice::describe() const {
  switch (mode) {
    case KMode::zero: return "zero";
    case KMode::random: return "random";
    case KMode::fixed: return to_string(value);
  }
  return "?";
}

void GenConfig::validate() const {
  if (dimension < 1) throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
  if (max_poly_degree < 0) throw Error(ErrorCode::invalid_argument, "max_poly_degree must be non-negative");
  if (max_terms < 1) throw Error(ErrorCode::invalid_argument, "max_terms must be positive");
  if (coefficient_bound < 1) throw Error(ErrorCode::invalid_argument, "coefficient_bound must be positive");
}

namespace {

std::seed_seq seed_for(std::uint64_t seed, std::uint64_t position, int dimension) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(position), static_cast<std::uint32_t>(position >> 32),
                       static_cast<std::uint32_t>(dimension)};
}

// Index sets of size p in increasing lexicographic order.
std::vector<IndexSet> combinations(int n, int p) {
  std::vector<IndexSet> out;
  if (p < 0 || p > n) return out;
  IndexSet current(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    int i = p - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

Generator::Generator(const GenConfig& config, std::uint64_t position, bool force_k_zero) : config_(config) {
  config_.validate();
  auto seq = seed_for(config.seed, position, config.dimension);
  rng_.seed(seq);
  Rational k = 0;
  if (config_.k.mode == KMode::fixed) k = config_.k.value;
  if (config_.k.mode == KMode::random) k = coefficient();  // drawn even when forced to zero
  if (force_k_zero) k = 0;
  chart_ = make_chart(default_coordinates(config_.dimension), k);
}

int Generator::uniform(int lo, int hi) {
  // Rejection sampling keeps the draw portable across standard libraries.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = rng_.max() - (rng_.max() % span);
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Rational Generator::coefficient() {
  const int b = config_.coefficient_bound;
  const int num = uniform(-b, b);
  int den = uniform(-b, b - 1);
  if (den >= 0) ++den;  // skip zero
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational Generator::constant() {
  Rational q;
  do {
    q = coefficient();
  } while (sgn(q) == 0);
  return q;
}

ScalarField Generator::scalar() {
  const int n = chart_->dimension();
  const int terms = uniform(1, config_.max_terms);
  std::vector<ScalarField::Term> out;
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<std::size_t>(n), 0);
    const int degree = uniform(0, config_.max_poly_degree);
    for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(uniform(0, n - 1))];
    const Rational q = coefficient();
    // Repeated monomials are dropped so that coefficients stay within the bound.
    const bool repeated =
        std::any_of(out.begin(), out.end(), [&](const ScalarField::Term& term) { return term.exponents == e; });
    if (!repeated) out.push_back({std::move(e), q});
  }
  return ScalarField::normalize(chart_, std::move(out));
}

ScalarField Generator::nonzero_scalar() {
  ScalarField f = scalar();
  while (f.is_zero()) f = scalar();
  return f;
}

OrdinaryForm Generator::form(int degree) {
  OrdinaryForm out = OrdinaryForm::zero(chart_, degree);
  const auto keys = combinations(chart_->dimension(), degree);
  if (keys.empty()) return out;
  const int forced = uniform(0, static_cast<int>(keys.size()) - 1);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (static_cast<int>(i) == forced)
      out += OrdinaryForm::basis(nonzero_scalar(), keys[i]);
    else if (uniform(0, 1) == 1)
      out += OrdinaryForm::basis(scalar(), keys[i]);
  }
  return out;
}

VectorField Generator::vector() {
  const int n = chart_->dimension();
  const int forced = uniform(0, n - 1);
  std::vector<ScalarField> components;
  for (int i = 0; i < n; ++i)
    components.push_back(i == forced ? nonzero_scalar() : uniform(0, 2) != 0 ? scalar() : ScalarField::zero(chart_));
  return VectorField::from_components(chart_, std::move(components));
}

GeneralizedForm Generator::gform(int degree) {
  if (degree < -1 || degree > chart_->dimension())
    throw Error(ErrorCode::invalid_argument, "generalized form degree " + std::to_string(degree) +
                                                 " outside [-1, " + std::to_string(chart_->dimension()) + "]");
  OrdinaryForm ordinary = form(degree);
  OrdinaryForm companion = form(degree + 1);
  return {degree, std::move(ordinary), std::move(companion)};
}

GeneralizedVector Generator::gvector() {
  VectorField field = vector();
  return {std::move(field), scalar()};
}

ScalarField gen_scalar(const GenConfig& config, std::uint64_t position) { return Generator(config, position).scalar(); }

GeneralizedForm gen_gform(const GenConfig& config, std::uint64_t position, int degree) {
  return Generator(config, position).gform(degree);
}

GeneralizedVector gen_gvec(const GenConfig& config, std::uint64_t position) {
  return Generator(config, position).gvector();
}

}  // namespace genform::harness
