#include "typetwo/oracle.hpp"

#include <algorithm>
#include <array>

namespace typetwo {

Oracle::Oracle(FiniteTable table)
    : name_("table"), table_(std::make_shared<const FiniteTable>(std::move(table))) {}

Oracle::Oracle(std::string name, Rule rule)
    : name_(std::move(name)), rule_(std::make_shared<const Rule>(std::move(rule))) {}

BitString Oracle::operator()(const BitString& query) const {
  if (table_) return table_->lookup(query);
  return (*rule_)(query);
}

const FiniteTable& Oracle::table() const {
  if (!table_) throw std::logic_error("oracle '" + name_ + "' is not a finite table");
  return *table_;
}

namespace {

BitString pair_second_or_empty(const BitString& q) {
  auto split = pair_decode(q);
  return split ? split->second : BitString{};
}

struct BuiltinEntry {
  const char* name;
  Oracle::Rule rule;
};

const std::array<BuiltinEntry, 6>& builtins() {
  static const std::array<BuiltinEntry, 6> table{{
      {"empty", [](const BitString&) { return BitString{}; }},
      {"identity", [](const BitString& q) { return q; }},
      {"doubling", [](const BitString& q) { return q + q; }},
      {"append1",
       [](const BitString& q) {
         BitString out = q;
         out.push_back(true);
         return out;
       }},
      // phi(<x,y>) = y.1: the binary rule phi(x,y) = y.1 seen through tupling.
      {"pair-append1",
       [](const BitString& q) {
         BitString out = pair_second_or_empty(q);
         out.push_back(true);
         return out;
       }},
      {"pair-second", pair_second_or_empty},
  }};
  return table;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

bool is_builtin_oracle(const std::string& name) {
  return std::any_of(builtins().begin(), builtins().end(),
                     [&](const BuiltinEntry& e) { return name == e.name; });
}

Oracle builtin_oracle(const std::string& name) {
  for (const auto& e : builtins()) {
    if (name == e.name) return Oracle(e.name, e.rule);
  }
  throw std::invalid_argument("unknown builtin oracle: " + name);
}

Oracle random_function_oracle(std::uint64_t seed, std::size_t max_len) {
  auto rule = [seed, max_len](const BitString& q) {
    std::uint64_t state = seed ^ 0xA0761D6478BD642FULL;
    for (std::size_t i = 0; i < q.size(); ++i) {
      state ^= (q.bit(i) ? 0x2545F4914F6CDD1DULL : 0x9FB21C651E98DF25ULL) + i;
      splitmix64(state);
    }
    state ^= q.size() * 0xE7037ED1A0B428DBULL;
    std::size_t len = splitmix64(state) % (max_len + 1);
    BitString out;
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (i % 64 == 0) word = splitmix64(state);
      out.push_back((word >> (i % 64)) & 1U);
    }
    return out;
  };
  return Oracle("random(" + std::to_string(seed) + "," + std::to_string(max_len) + ")", rule);
}

std::size_t oracle_size(const FiniteTable& table, std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw EnumerationCapExceeded("oracle_size: n = " + std::to_string(n) +
                                 " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::size_t best = 0;
  for (std::size_t len = 0; len <= n; ++len) {
    for (const auto& a : all_strings_of_length(len)) best = std::max(best, table.lookup(a).size());
  }
  return best;
}

SizeFunction table_size_function(const FiniteTable& table, std::size_t /*cap*/) {
  // Per key length: the longest answer among keys of that length and how many
  // keys there are. A length with fewer keys than strings also reaches the
  // fallback.
  std::map<std::size_t, std::pair<std::size_t, BigNat>> by_len;
  for (const auto& [k, v] : table.entries) {
    auto& slot = by_len[k.size()];
    slot.first = std::max(slot.first, v.size());
    slot.second += 1;
  }
  std::size_t fallback = table.fallback.size();
  return [by_len = std::move(by_len), fallback](const BigNat& n) -> BigNat {
    std::size_t best = 0;
    bool reaches_fallback = false;
    std::size_t len = 0;
    for (const auto& [klen, slot] : by_len) {
      if (BigNat(klen) > n) break;
      if (klen > len) reaches_fallback = true;  // a whole length without keys
      best = std::max(best, slot.first);
      if (slot.second < (BigNat(1) << klen)) reaches_fallback = true;
      len = klen + 1;
    }
    if (BigNat(len) <= n) reaches_fallback = true;
    if (reaches_fallback) best = std::max(best, fallback);
    return best;
  };
}

}  // namespace typetwo
