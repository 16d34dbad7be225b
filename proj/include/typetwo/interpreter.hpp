#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "typetwo/machine.hpp"
#include "typetwo/oracle.hpp"
#include "typetwo/sopoly.hpp"

namespace typetwo {

struct QueryEvent {
  std::uint64_t step = 0;  // cumulative step count once the QUERY has executed
  std::size_t query_size = 0;
  std::size_t answer_size = 0;
  BitString query;
  BitString answer;
};

struct Trace {
  BitString input;
  BitString output;
  std::uint64_t steps = 0;
  bool halted = false;
  std::size_t halt_pc = 0;  // index of the HALT that ended the run
  std::vector<QueryEvent> events;

  std::size_t input_length() const noexcept { return input.size(); }
};

/// The run used up its fuel. The partial trace is complete up to the last
/// instruction that fit in the budget.
class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(Trace partial)
      : std::runtime_error("fuel exhausted after " + std::to_string(partial.steps) + " steps"),
        partial_(std::move(partial)) {}
  const Trace& partial() const noexcept { return partial_; }

 private:
  Trace partial_;
};

inline constexpr std::uint64_t kDefaultFuel = 50'000'000;

Trace run(const Machine& m, const Oracle& oracle, const BitString& input,
          std::uint64_t fuel = kDefaultFuel);

struct MSample {
  std::uint64_t from_step;  // m_k takes this value for from_step <= k
  std::size_t m;
};

struct RunMetrics {
  std::uint64_t steps = 0;
  std::size_t m = 0;
  std::vector<MSample> m_series;  // one sample per change, starting at step 0
  std::size_t lookahead_revisions = 0;
  std::size_t length_revisions = 0;
};

RunMetrics metrics(const Trace& t);

/// Counters from bare size sequences, for traces that were not produced by run().
std::size_t count_lookahead_revisions(const std::vector<std::size_t>& query_sizes);
std::size_t count_length_revisions(std::size_t input_length,
                                   const std::vector<std::size_t>& answer_sizes);

bool check_step_count_plain(const Trace& t, const UnaryPolynomial& p);
bool check_step_count_ks(const Trace& t, const UnaryPolynomial& p);

/// Table agreeing with the run's oracle on every queried string and answering
/// `fallback` elsewhere.
FiniteTable replay_table(const Trace& t, const BitString& fallback = {});

/// Table agreeing on the first j distinct queried strings, ε elsewhere.
FiniteTable truncated_replay_table(const Trace& t, std::size_t j);

/// Worst step count over all |a| <= n and all oracles with answers of length
/// <= n, explored lazily: each fresh query branches over every admissible
/// answer. Throws EnumerationCapExceeded past `max_runs` explored runs.
std::uint64_t brute_force_step_count(const Machine& m, std::size_t n,
                                     std::uint64_t fuel = 1'000'000,
                                     std::uint64_t max_runs = 2'000'000);

}  // namespace typetwo
