#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genform/dsl.hpp"
#include "genform/harness/generator.hpp"
#include "genform/value.hpp"

namespace genform::harness {

// Operator variants the identities are evaluated with. Only the test suite uses the
// mutated ones, to show that the identity checks can fail.
enum class Mutation {
  none,
  flip_d_k_term,          // d with +k instead of (-1)^{p+1} k, a sign flip for even p
  flip_contract_v0_term,  // I_V with -p (-1)^{p-1} v0 a_p
};

struct Operators {
  GeneralizedForm (*d)(const GeneralizedForm&);
  GeneralizedForm (*contract)(const GeneralizedVector&, const GeneralizedForm&);

  static Operators for_mutation(Mutation m);

  // I_V d a + d I_V a composed from this operator set.
  GeneralizedForm lie_cartan(const GeneralizedVector& v, const GeneralizedForm& a) const;
};

// Degenerate input forced on a trial.
enum class Degenerate { none, zero_vector, zero_form, k_zero, zero_scalar_part };

const char* degenerate_name(Degenerate d);

// Degrees and degenerate case assigned to a trial index.
struct TrialPlan {
  std::uint64_t index = 0;
  int p = 0;
  int q = 0;
  int r = 0;
  Degenerate degenerate = Degenerate::none;

  // Degrees enumerate [-1, n]^3 with p fastest, so (p, q) pairs are exhausted after
  // (n+2)^2 trials; degenerate cases cycle with period 7.
  static TrialPlan schedule(std::uint64_t index, int dimension);
};

// Named inputs of one trial.
struct Inputs {
  ChartRef chart;
  std::vector<std::pair<std::string, Value>> values;

  void add(std::string name, Value v) { values.emplace_back(std::move(name), std::move(v)); }
  const Value& get(std::string_view name) const;
  const GeneralizedForm& gform(std::string_view name) const;
  const GeneralizedVector& gvector(std::string_view name) const;
  const OrdinaryForm& form(std::string_view name) const;
  const VectorField& vector(std::string_view name) const;
  ScalarField scalar(std::string_view name) const;

  // Session text that re-parses to these inputs.
  std::string render() const;
  static Inputs from_session(const dsl::Session& session);
};

struct Check {
  std::string label;
  Value lhs;
  Value rhs;
};

struct Identity {
  std::string_view id;
  std::string_view title;
  Inputs (*generate)(Generator&, const TrialPlan&);
  std::vector<Check> (*evaluate)(const Operators&, const Inputs&);
};

// P1..P17 in order.
std::span<const Identity> identities();
// Throws Error{unknown_identity}.
const Identity& find_identity(std::string_view id);

}  // namespace genform::harness
