#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "typetwo/sopoly.hpp"
#include "typetwo/strings.hpp"

namespace typetwo {

/// Raised when an exponential enumeration would exceed its configured cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FiniteTable {
  std::map<BitString, BitString> entries;
  BitString fallback;  // answer for every string without an entry

  BitString lookup(const BitString& q) const {
    auto it = entries.find(q);
    return it == entries.end() ? fallback : it->second;
  }
};

/// A total map from bit strings to bit strings. Either a finite table with a
/// default answer, or a named rule (builtins, adversaries, machine-backed
/// oracles built by transforms). Copies share the underlying rule.
class Oracle {
 public:
  using Rule = std::function<BitString(const BitString&)>;

  Oracle() : Oracle(FiniteTable{}) {}
  explicit Oracle(FiniteTable table);
  Oracle(std::string name, Rule rule);

  BitString operator()(const BitString& query) const;

  bool is_table() const noexcept { return table_ != nullptr; }
  const FiniteTable& table() const;  // throws std::logic_error for rules
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::shared_ptr<const FiniteTable> table_;
  std::shared_ptr<const Rule> rule_;
};

/// Named builtin rules available from the CLI and oracle files:
/// empty, identity, doubling, append1, pair-append1, pair-second.
Oracle builtin_oracle(const std::string& name);
bool is_builtin_oracle(const std::string& name);

/// Deterministic pseudo-random total function: each query hashes (with the
/// seed) to an answer of length at most max_len.
Oracle random_function_oracle(std::uint64_t seed, std::size_t max_len);

/// Default cap on n for oracle_size: 2^(cap+1) - 1 strings are enumerated.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// |phi|(n) = max over |a| <= n of |phi(a)|, by enumerating every string of
/// length at most n. Throws EnumerationCapExceeded when n > cap.
std::size_t oracle_size(const FiniteTable& table, std::size_t n,
                        std::size_t cap = kDefaultEnumerationCap);

/// Exact size function of a finite table at every argument. Below the longest
/// key it enumerates (via oracle_size); above it the value is saturated, since
/// every entry is reachable and some string of each length misses the table.
SizeFunction table_size_function(const FiniteTable& table,
                                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace typetwo
