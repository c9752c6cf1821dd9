#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "genform/generalized.hpp"

namespace genform::harness {

enum class KMode { zero, random, fixed };

struct KChoice {
  KMode mode = KMode::random;
  Rational value = 0;  // used when mode == fixed

  // "zero", "random" or a rational constant; nullopt if malformed.
  static std::optional<KChoice> parse(std::string_view text);
  std::string describe() const;
};

struct GenConfig {
  std::uint64_t seed = 0;
  int dimension = 2;
  int max_poly_degree = 3;
  int max_terms = 4;
  int coefficient_bound = 5;
  KChoice k;

  // Throws Error{invalid_argument} on out-of-range bounds.
  void validate() const;
};

// Deterministic source of random charts, fields and forms. Identical (config,
// stream position) pairs produce identical objects.
class Generator {
 public:
  Generator(const GenConfig& config, std::uint64_t position, bool force_k_zero = false);

  const ChartRef& chart() const { return chart_; }
  const GenConfig& config() const { return config_; }

  ScalarField scalar();
  ScalarField nonzero_scalar();
  // Non-zero rational with numerator and denominator bounded by coefficient_bound.
  Rational constant();
  // Random ordinary p-form, non-zero inside [0, n] and zero outside.
  OrdinaryForm form(int degree);
  VectorField vector();
  // Throws Error{invalid_argument} unless -1 <= p <= n.
  GeneralizedForm gform(int degree);
  GeneralizedVector gvector();

  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);

 private:
  Rational coefficient();

  GenConfig config_;
  std::mt19937_64 rng_;
  ChartRef chart_;
};

ScalarField gen_scalar(const GenConfig& config, std::uint64_t position);
GeneralizedForm gen_gform(const GenConfig& config, std::uint64_t position, int degree);
GeneralizedVector gen_gvec(const GenConfig& config, std::uint64_t position);

}  // namespace genform::harness
