#pragma once

// Straightforward reference implementations used as test oracles. They are
// written independently of the library code paths they check.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "typetwo/interpreter.hpp"
#include "typetwo/strings.hpp"

namespace oracles {

inline std::string naive_pair(const std::string& a, const std::string& b) {
  std::string out;
  for (char c : a) out += (c == '0') ? "00" : "01";
  return out + "11" + b;
}

// Reads bit pairs until the separator; anything else is malformed (-> "").
inline std::string naive_first(const std::string& t) {
  std::string out;
  for (std::size_t i = 0; i + 1 < t.size(); i += 2) {
    std::string d = t.substr(i, 2);
    if (d == "00") out += '0';
    else if (d == "01") out += '1';
    else if (d == "11") return out;
    else return "";
  }
  return "";
}

inline std::string naive_second(const std::string& t) {
  for (std::size_t i = 0; i + 1 < t.size(); i += 2) {
    std::string d = t.substr(i, 2);
    if (d == "11") return t.substr(i + 2);
    if (d == "10") return "";
  }
  return "";
}

inline std::string naive_tuple(const std::vector<std::string>& parts) {
  std::string acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = naive_pair(parts[i], acc);
  return acc;
}

// Quadratic recount of both revision notions straight from the definitions.
inline std::size_t naive_lookahead(const std::vector<std::size_t>& q) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    bool bigger = true;
    for (std::size_t j = 0; j < i; ++j) bigger = bigger && q[i] > q[j];
    if (bigger) ++count;
  }
  return count;
}

inline std::size_t naive_length(std::size_t input, const std::vector<std::size_t>& a) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool bigger = a[i] > input;
    for (std::size_t j = 0; j < i; ++j) bigger = bigger && a[i] > a[j];
    if (bigger) ++count;
  }
  return count;
}

// Prefix step-count check straight from the definition: every k <= time
// satisfies k <= p(m_k), m_k the largest of |a| and the answers seen by step k.
template <class P>
bool naive_ks(const typetwo::Trace& t, P p) {
  for (std::uint64_t k = 0; k <= t.steps; ++k) {
    std::size_t mk = t.input.size();
    for (const auto& e : t.events) {
      if (e.step <= k) mk = std::max(mk, e.answer_size);
    }
    if (typetwo::BigNat(k) > p(typetwo::BigNat(mk))) return false;
  }
  return true;
}

inline std::vector<std::string> all_strings(std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() < max_len) {
      out.push_back(out[i] + "0");
      out.push_back(out[i] + "1");
    }
  }
  return out;
}

}  // namespace oracles
