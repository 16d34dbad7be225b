#include "typetwo/strings.hpp"

#include <algorithm>

namespace typetwo {

BitString::BitString(std::string_view text) : bits_(text) {
  for (char ch : bits_) {
    if (ch != '0' && ch != '1') {
      throw MalformedEncoding("bit string contains '" + std::string(1, ch) + "'");
    }
  }
}

BitString truncate(const BitString& a, std::size_t n) {
  if (n >= a.size()) return a;
  BitString out = a;
  out.resize(n);
  return out;
}

bool is_prefix(const BitString& b, const BitString& a) {
  return b.size() <= a.size() && a.str().compare(0, b.size(), b.str()) == 0;
}

BitString double_bits(const BitString& a) {
  BitString out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(false);
    out.push_back(a.bit(i));
  }
  return out;
}

BitString pair_encode(const BitString& a, const BitString& b) {
  BitString out = double_bits(a);
  out.push_back(true);
  out.push_back(true);
  out.append(b);
  return out;
}

std::optional<std::pair<BitString, BitString>> pair_decode(const BitString& t) {
  BitString first;
  std::size_t i = 0;
  while (i + 1 < t.size()) {
    bool hi = t.bit(i);
    bool lo = t.bit(i + 1);
    i += 2;
    if (hi && lo) {
      return std::make_pair(std::move(first),
                            BitString(std::string_view(t.str()).substr(i)));
    }
    if (hi) return std::nullopt;  // "10"
    first.push_back(lo);
  }
  return std::nullopt;
}

BitString tuple_encode(std::span<const BitString> parts) {
  if (parts.empty()) throw std::invalid_argument("tuple_encode: empty part list");
  BitString acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = pair_encode(parts[i], acc);
  return acc;
}

BitString tuple_encode(std::initializer_list<BitString> parts) {
  return tuple_encode(std::span<const BitString>(parts.begin(), parts.size()));
}

BitString tuple_project(std::size_t i, std::size_t k, const BitString& t) {
  if (i < 1 || i > k) throw std::invalid_argument("tuple_project: need 1 <= i <= k");
  BitString rest = t;
  for (std::size_t j = 1; j < k; ++j) {
    auto split = pair_decode(rest);
    if (!split) return {};
    if (j == i) return split->first;
    rest = std::move(split->second);
  }
  return rest;
}

BitString encode_hash_alphabet(std::string_view s) {
  std::string out;
  out.reserve(2 * s.size());
  for (char ch : s) {
    switch (ch) {
      case '0': out += "00"; break;
      case '1': out += "01"; break;
      case '#': out += "11"; break;
      default: throw MalformedEncoding("symbol outside {0,1,#}: " + std::string(1, ch));
    }
  }
  return BitString(out);
}

std::string decode_hash_alphabet(const BitString& b) {
  if (b.size() % 2 != 0) throw MalformedEncoding("odd-length #-alphabet encoding");
  std::string out;
  out.reserve(b.size() / 2);
  for (std::size_t i = 0; i < b.size(); i += 2) {
    bool hi = b.bit(i);
    bool lo = b.bit(i + 1);
    if (hi && !lo) throw MalformedEncoding("digraph \"10\" at offset " + std::to_string(i));
    out.push_back(hi ? '#' : (lo ? '1' : '0'));
  }
  return out;
}

std::vector<BitString> all_strings_of_length(std::size_t n) {
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
    std::string s(n, '0');
    for (std::size_t j = 0; j < n; ++j) {
      if (v & (std::size_t{1} << (n - 1 - j))) s[j] = '1';
    }
    out.emplace_back(s);
  }
  return out;
}

}  // namespace typetwo
