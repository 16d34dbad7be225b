#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "typetwo/interpreter.hpp"
#include "typetwo/machine.hpp"
#include "typetwo/oracle.hpp"

namespace typetwo {

using Rng = std::mt19937_64;

BitString random_bits(Rng& rng, std::size_t max_len);
BitString random_bits_exact(Rng& rng, std::size_t len);

/// Random input for a machine taking `arity` tupled components (arity 1 means
/// a plain string).
BitString random_input(Rng& rng, std::size_t arity, std::size_t max_component);

struct Case {
  FiniteTable table;
  BitString input;
};

struct CorpusOptions {
  std::size_t count = 500;
  std::size_t arity = 1;
  std::size_t max_component = 12;
  std::size_t max_answer = 12;
  std::uint64_t fuel = 5'000'000;
};

/// Random finite-table cases for m: each case runs m against a seeded random
/// function, then freezes the answers it saw (plus a random fallback) into a
/// table. By locality the table reproduces the run.
std::vector<Case> make_corpus(const Machine& m, const CorpusOptions& opt, std::uint64_t seed);

/// Random tables without reference to a machine: `entries` random keys of
/// length <= max_key, random answers, random fallback.
FiniteTable random_table(Rng& rng, std::size_t entries, std::size_t max_key, std::size_t max_answer);

}  // namespace typetwo
