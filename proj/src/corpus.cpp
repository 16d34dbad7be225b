#include "typetwo/corpus.hpp"

namespace typetwo {

BitString random_bits_exact(Rng& rng, std::size_t len) {
  BitString out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(rng() & 1U);
  return out;
}

BitString random_bits(Rng& rng, std::size_t max_len) {
  return random_bits_exact(rng, std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
}

BitString random_input(Rng& rng, std::size_t arity, std::size_t max_component) {
  if (arity <= 1) return random_bits(rng, max_component);
  std::vector<BitString> parts;
  for (std::size_t i = 0; i < arity; ++i) parts.push_back(random_bits(rng, max_component));
  return tuple_encode(parts);
}

std::vector<Case> make_corpus(const Machine& m, const CorpusOptions& opt, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Case> out;
  out.reserve(opt.count);
  for (std::size_t i = 0; i < opt.count; ++i) {
    BitString input = random_input(rng, opt.arity, opt.max_component);
    std::size_t max_answer = std::uniform_int_distribution<std::size_t>(0, opt.max_answer)(rng);
    Oracle phi = random_function_oracle(rng(), max_answer);
    BitString fallback = random_bits(rng, max_answer);
    Trace t = run(m, phi, input, opt.fuel);
    out.push_back({replay_table(t, fallback), std::move(input)});
  }
  return out;
}

FiniteTable random_table(Rng& rng, std::size_t entries, std::size_t max_key, std::size_t max_answer) {
  FiniteTable table;
  table.fallback = random_bits(rng, max_answer);
  for (std::size_t i = 0; i < entries; ++i) {
    table.entries[random_bits(rng, max_key)] = random_bits(rng, max_answer);
  }
  return table;
}

}  // namespace typetwo
