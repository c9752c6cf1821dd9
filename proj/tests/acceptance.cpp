// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "genform/dsl.hpp"
#include "genform/harness/runner.hpp"
#include "golden.hpp"
#include "session_gen.hpp"

using namespace genform;
using namespace genform::harness;

namespace {

constexpr std::uint64_t seed = 2024;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Runs `id` for n = 1..4 with k zero and random.
void sweep(Outcome& o, std::string_view id, std::uint64_t trials, std::uint64_t* nonzero = nullptr) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto k : {KMode::zero, KMode::random}) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.dimension = n;
      cfg.k.mode = k;
      const auto report = run_identity(id, cfg, trials);
      if (nonzero) *nonzero += report.nonzero_trials;
      if (!report.passed()) {
        const auto& f = report.failures.front();
        o.fail(std::string(id) + " " + f.config + " " + f.check);
      }
    }
  }
}

Outcome identity_sweep(std::initializer_list<std::pair<std::string_view, std::uint64_t>> runs) {
  Outcome o;
  std::string summary;
  for (const auto& [id, trials] : runs) {
    sweep(o, id, trials);
    summary += (summary.empty() ? "" : ", ") + std::string(id) + " x" + std::to_string(trials);
  }
  if (o.pass) o.detail = summary + " per dimension and k mode";
  return o;
}

// Degenerate inputs named in the interior-product criterion must be scheduled.
bool degenerate_cases_scheduled(std::uint64_t trials) {
  for (int n = 1; n <= 4; ++n) {
    bool zero_vector = false, p0 = false, pn = false;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const auto plan = TrialPlan::schedule(t, n);
      zero_vector = zero_vector || plan.degenerate == Degenerate::zero_vector;
      p0 = p0 || plan.p == 0;
      pn = pn || plan.p == n;
    }
    if (!(zero_vector && p0 && pn)) return false;
  }
  return true;
}

Outcome residual() {
  Outcome o;
  std::uint64_t nonzero = 0;
  sweep(o, "P10", 200, &nonzero);
  // Witness: V = (0, x), W = (d/dx, 0), a = (x dy, 0) gives the residual (0, x dy).
  const auto chart = make_chart({"x", "y"}, 1);
  const auto x = ScalarField::coordinate(chart, 0);
  const GeneralizedVector V(VectorField::zero(chart), x);
  const GeneralizedVector W(VectorField::basis(chart, 0), ScalarField::zero(chart));
  const GeneralizedForm a(1, OrdinaryForm::basis(x, {1}), OrdinaryForm::zero(chart, 2));
  const auto r = lie_residual(V, W, a);
  if (r.is_zero() || !(r == GeneralizedForm(0, OrdinaryForm::zero(chart, 0), OrdinaryForm::basis(x, {1}))))
    o.fail("witness residual is " + format(r));
  if (nonzero == 0) o.fail("no scheduled trial had a nonzero residual");
  if (o.pass) o.detail = "P10 x200 per dimension and k mode, " + std::to_string(nonzero) +
                         " nonzero residuals, witness " + format(r);
  return o;
}

Outcome mutations() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.dimension = n;
    if (run_identity("P4", cfg, 50, Mutation::flip_d_k_term).passed()) o.fail("flipped k term not detected, n=" + std::to_string(n));
    if (run_identity("P10", cfg, 50, Mutation::flip_contract_v0_term).passed())
      o.fail("flipped v0 term not detected, n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "both mutants fail within 50 trials for n = 1..4";
  return o;
}

Outcome cli_suite() {
  Outcome o;
  int golden = 0;
  for (const auto& c : testing::golden_cases(GENFORM_GOLDEN_DIR)) {
    std::ostringstream out, err;
    const int status = cli::run(c.args, out, err);
    ++golden;
    if (status != 0 || out.str() != testing::read_file(std::string(GENFORM_GOLDEN_DIR) + "/" + c.expected_file))
      o.fail("golden " + c.expected_file + " differs");
  }
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto first = dsl::parse_session(testing::random_session(seed, i));
    const auto printed = dsl::format_session(first);
    const auto second = dsl::parse_session(printed);
    if (!(first == second) || dsl::format_session(second) != printed) o.fail("round trip of session " + std::to_string(i));
  }
  std::ostringstream out, err;
  const int status = cli::run({"check", "all", "--dim", "2", "--trials", "100", "--seed", "7", "--k", "random"}, out, err);
  if (status != 0) o.fail("check all exited " + std::to_string(status));
  if (o.pass) o.detail = std::to_string(golden) + " golden files, 100 round trips, check all exit 0";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"nilpotency", [] { return identity_sweep({{"P4", 200}}); }},
      {"interior-product laws",
       [] {
         auto o = identity_sweep({{"P7", 200}, {"P8", 200}});
         if (!degenerate_cases_scheduled(200)) o.fail("degenerate inputs not scheduled");
         return o;
       }},
      {"scalar-module law", [] { return identity_sweep({{"P6", 200}}); }},
      {"cartan consistency", [] { return identity_sweep({{"P9", 200}}); }},
      {"failure law", residual},
      {"corrected-derivative laws", [] { return identity_sweep({{"P11", 200}, {"P12", 200}, {"P13", 200}}); }},
      {"algebra structure", [] { return identity_sweep({{"P14", 200}, {"P16", 200}, {"P15", 100}}); }},
      {"embedding", [] { return identity_sweep({{"P17", 100}}); }},
      {"mutation sensitivity", mutations},
      {"cli", cli_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << " " << criteria[i].name << ": " << (o.pass ? "PASS" : "FAIL") << " ("
              << o.detail << ")" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
