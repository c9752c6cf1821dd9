#include "genform/harness/runner.hpp"

#include <optional>

#include "genform/error.hpp"

namespace genform::harness {

namespace {

struct TrialOutcome {
  std::optional<Failure> failure;
  bool nonzero = false;
};

std::string config_echo(const GenConfig& config, const TrialPlan& plan, const Chart& chart) {
  return "seed=" + std::to_string(config.seed) + " dim=" + std::to_string(config.dimension) +
         " trial=" + std::to_string(plan.index) + " k=" + to_string(chart.k) + " p=" + std::to_string(plan.p) +
         " q=" + std::to_string(plan.q) + " r=" + std::to_string(plan.r) +
         " degenerate=" + degenerate_name(plan.degenerate);
}

// One independent trial; never throws.
TrialOutcome run_trial(const Identity& identity, const GenConfig& config, const Operators& ops, std::uint64_t index) {
  const TrialPlan plan = TrialPlan::schedule(index, config.dimension);
  TrialOutcome outcome;
  std::string echo = "seed=" + std::to_string(config.seed) + " trial=" + std::to_string(index);
  std::string inputs;
  try {
    Generator gen(config, index, plan.degenerate == Degenerate::k_zero);
    echo = config_echo(config, plan, *gen.chart());
    const Inputs in = identity.generate(gen, plan);
    inputs = in.render();
    const std::vector<Check> checks = identity.evaluate(ops, in);
    outcome.nonzero = !checks.empty() && !is_zero(checks.front().lhs);
    for (const auto& c : checks) {
      if (c.lhs == c.rhs) continue;
      outcome.failure = Failure{index, echo, c.label, inputs, format(c.lhs), format(c.rhs)};
      break;
    }
  } catch (const std::exception& e) {
    outcome.failure = Failure{index, echo, std::string("exception: ") + e.what(), inputs, "", ""};
  }
  return outcome;
}

IdentityReport collect(const Identity& identity, const std::vector<TrialOutcome>& outcomes) {
  IdentityReport report;
  report.identity = std::string(identity.id);
  report.trials_run = outcomes.size();
  for (const auto& o : outcomes) {
    if (o.nonzero) ++report.nonzero_trials;
    if (o.failure) report.failures.push_back(*o.failure);
  }
  return report;
}

}  // namespace

IdentityReport run_identity(std::string_view id, const GenConfig& config, std::uint64_t trials, Mutation mutation) {
  const Identity& identity = find_identity(id);
  config.validate();
  const Operators ops = Operators::for_mutation(mutation);
  std::vector<TrialOutcome> outcomes(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < count; ++t) {
    outcomes[static_cast<std::size_t>(t)] = run_trial(identity, config, ops, static_cast<std::uint64_t>(t));
  }
  return collect(identity, outcomes);
}

IdentityReport run_identity_serial(std::string_view id, const GenConfig& config, std::uint64_t trials,
                                   Mutation mutation) {
  const Identity& identity = find_identity(id);
  config.validate();
  const Operators ops = Operators::for_mutation(mutation);
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) outcomes.push_back(run_trial(identity, config, ops, t));
  return collect(identity, outcomes);
}

std::vector<std::string> replay(std::string_view id, const dsl::Session& session, Mutation mutation) {
  const Identity& identity = find_identity(id);
  const Inputs in = Inputs::from_session(session);
  std::vector<std::string> failing;
  for (const auto& c : identity.evaluate(Operators::for_mutation(mutation), in))
    if (!(c.lhs == c.rhs)) failing.push_back(c.label);
  return failing;
}

}  // namespace genform::harness
