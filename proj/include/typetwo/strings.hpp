#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace typetwo {

/// Raised when a string over {0,1,#} is not the image of the two-bit encoding,
/// or when text that should hold only '0'/'1' contains anything else.
class MalformedEncoding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite word over {0,1}. Stored as ASCII '0'/'1' so that serialization is
/// the identity.
class BitString {
 public:
  BitString() = default;
  /// Throws MalformedEncoding on any character other than '0' or '1'.
  explicit BitString(std::string_view text);

  static BitString ones(std::size_t n) { return FromTrusted(std::string(n, '1')); }
  static BitString zeros(std::size_t n) { return FromTrusted(std::string(n, '0')); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool bit(std::size_t i) const { return bits_[i] == '1'; }
  const std::string& str() const noexcept { return bits_; }

  void push_back(bool b) { bits_.push_back(b ? '1' : '0'); }
  void pop_back() { bits_.pop_back(); }
  void append(const BitString& other) { bits_ += other.bits_; }
  void resize(std::size_t n) { bits_.resize(n, '0'); }

  friend BitString operator+(BitString a, const BitString& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  static BitString FromTrusted(std::string s) {
    BitString b;
    b.bits_ = std::move(s);
    return b;
  }

  std::string bits_;
};

/// a^{<=n}: the length-min(n,|a|) prefix.
BitString truncate(const BitString& a, std::size_t n);

/// True iff b is an initial segment of a.
bool is_prefix(const BitString& b, const BitString& a);

/// dbl(a): 0 -> 00, 1 -> 01.
BitString double_bits(const BitString& a);

/// <a,b> := dbl(a) . "11" . b, so |<a,b>| = 2|a| + 2 + |b|.
BitString pair_encode(const BitString& a, const BitString& b);

/// Inverse of pair_encode; nullopt if t does not start with a doubled word
/// terminated by "11".
std::optional<std::pair<BitString, BitString>> pair_decode(const BitString& t);

/// Right-nested k-tuple <a1,<a2,...<a_{k-1},a_k>...>>. A single part encodes
/// as itself. Throws std::invalid_argument on an empty list.
BitString tuple_encode(std::span<const BitString> parts);
BitString tuple_encode(std::initializer_list<BitString> parts);

/// pi_{i,k}, 1-based. Malformed input yields the empty string.
/// Throws std::invalid_argument unless 1 <= i <= k.
BitString tuple_project(std::size_t i, std::size_t k, const BitString& t);

/// 0 -> 00, 1 -> 01, # -> 11.
BitString encode_hash_alphabet(std::string_view s);

/// Inverse of encode_hash_alphabet; throws MalformedEncoding on odd length or
/// on a "10" digraph.
std::string decode_hash_alphabet(const BitString& b);

/// All bit strings of length exactly n, in lexicographic order.
std::vector<BitString> all_strings_of_length(std::size_t n);

}  // namespace typetwo
