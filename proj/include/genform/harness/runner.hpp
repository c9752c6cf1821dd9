#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genform/harness/identities.hpp"

namespace genform::harness {

struct Failure {
  std::uint64_t trial = 0;
  std::string config;  // seed, dimension, k, degrees and degenerate case
  std::string check;
  std::string inputs;  // session text reproducing the failure
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct IdentityReport {
  std::string identity;
  std::uint64_t trials_run = 0;
  // Trials whose first left-hand side was non-zero.
  std::uint64_t nonzero_trials = 0;
  std::vector<Failure> failures;  // sorted by trial index

  bool passed() const { return failures.empty(); }

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

// Runs `trials` independent trials of identity `id` across OpenMP threads.
// Throws Error{unknown_identity}.
IdentityReport run_identity(std::string_view id, const GenConfig& config, std::uint64_t trials,
                            Mutation mutation = Mutation::none);

// Single-threaded reference for run_identity; produces an identical report.
IdentityReport run_identity_serial(std::string_view id, const GenConfig& config, std::uint64_t trials,
                                   Mutation mutation = Mutation::none);

// Re-evaluates an identity on inputs recovered from a rendered counterexample;
// returns the labels of the checks that fail.
std::vector<std::string> replay(std::string_view id, const dsl::Session& session, Mutation mutation = Mutation::none);

}  // namespace genform::harness
