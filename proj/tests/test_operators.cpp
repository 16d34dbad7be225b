#include "doctest.h"
#include "oracles.hpp"
#include "typetwo/corpus.hpp"
#include "typetwo/interpreter.hpp"
#include "typetwo/operators.hpp"

using namespace typetwo;

namespace {

BitString B(const char* s) { return BitString(s); }

FiniteTable table(std::initializer_list<std::pair<const char*, const char*>> entries) {
  FiniteTable t;
  for (const auto& [k, v] : entries) t.entries[BitString(k)] = BitString(v);
  return t;
}

BitString append_one(const BitString&, const BitString& y) { return y + B("1"); }

// Rec by direct recursion on c, as displayed.
BitString rec_recursive(const BinaryRule& phi, const BitString& a, const BitString& b, const BitString& c) {
  if (c.empty()) return a;
  BitString shorter = truncate(c, c.size() - 1);
  return truncate(phi(c, rec_recursive(phi, a, b, shorter)), b.size());
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("rec_ref") {
  BinaryRule any = [](const BitString&, const BitString&) { return B("0000"); };
  CHECK(rec_ref(any, B("10"), B("1"), B("")) == B("10"));
  CHECK(rec_ref(append_one, B(""), B("111"), B("101")) == B("111"));
  CHECK(rec_ref(append_one, B(""), B("1"), B("11")) == B("1"));
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    BinaryRule phi = untupled(random_function_oracle(i, 8));
    BitString a = random_bits(rng, 6), b = random_bits(rng, 6), c = random_bits(rng, 6);
    CHECK(rec_ref(phi, a, b, c) == rec_recursive(phi, a, b, c));
  }
}

TEST_CASE("rec_prime_ref") {
  UnaryRule two = [](const BitString&) { return B("11"); };
  UnaryRule none = [](const BitString&) { return B(""); };
  CHECK(rec_prime_ref(append_one, B("0"), two, B("")) == B("0"));
  CHECK(rec_prime_ref(append_one, B(""), two, B("10")) == B("11"));
  CHECK(rec_prime_ref(append_one, B(""), none, B("1")) == B(""));
}

TEST_CASE("R machine") {
  Machine r = build_R_machine();
  Oracle psi = tupled_oracle(append_one);
  Trace t = run(r, psi, tuple_encode({B(""), B("111"), B("101")}));
  CHECK(t.output == B("111"));
  CHECK(metrics(t).lookahead_revisions == 1);

  Trace empty_c = run(r, psi, tuple_encode({B("01"), B("111"), B("")}));
  CHECK(empty_c.output == B("01"));
  CHECK(empty_c.events.size() == 1);

  for (const auto& c : make_corpus(r, CorpusOptions{300, 3, 10, 10, 5000000}, 32)) {
    Oracle o(c.table);
    Trace tr = run(r, o, c.input);
    CHECK(tr.output == R_ref(o, c.input));
    CHECK(metrics(tr).lookahead_revisions == 1);
  }
}

TEST_CASE("S and T") {
  Machine t = build_T_machine();
  Oracle too_long("long", [](const BitString&) { return B("11111"); });
  CHECK(run(t, too_long, tuple_encode({B(""), B("11"), B("0101")})).output == B(""));
  CHECK(run(t, too_long, tuple_encode({B(""), B("11"), B("0101")})).events.size() == 1);

  Machine s = build_S_machine();
  Rng rng(33);
  for (int i = 0; i < 300; ++i) {
    Oracle psi = random_function_oracle(100 + i, 10);
    BitString a = random_bits(rng, 10), b = random_bits(rng, 10), c = random_bits(rng, 10);
    BitString in = tuple_encode({a, b, c});
    CHECK(run_ST_composition(psi, in) == rec_ref(untupled(psi), a, b, c));
    CHECK(run(s, psi, in).output == S_ref(psi, in));
    Trace tt = run(t, S_oracle_for(psi, b), in);
    CHECK(tt.output == T_ref(S_oracle_for(psi, b), in));
    CHECK(metrics(tt).length_revisions <= 1);
  }
}

TEST_CASE("iteration") {
  Machine m = build_iteration_machine();
  CHECK(run(m, builtin_oracle("doubling"), B("111")).output == BitString::zeros(8));
  CHECK(run(m, Oracle(), B("")).output == B("0"));
  CHECK(run(m, Oracle(table({{"0", "101"}})), B("1")).output == B("101"));
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(run(m, builtin_oracle("doubling"), BitString::ones(n)).output.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("prefix-max") {
  Machine m = build_prefix_max_machine();
  Oracle phi(table({{"", "11"}, {"0", "1"}, {"01", "11111"}}));
  CHECK(run(m, phi, B("01")).output == B("11111"));
  CHECK(run(m, phi, B("")).output == B("11"));
  // Prefixes are queried longest first; answers growing in that order revise every time.
  FiniteTable inc;
  BitString a("10110");
  for (std::size_t i = 0; i <= a.size(); ++i) inc.entries[truncate(a, i)] = BitString::ones(2 * a.size() + 1 - i);
  Trace t = run(m, Oracle(inc), a);
  CHECK(metrics(t).lookahead_revisions == 1);
  CHECK(metrics(t).length_revisions == a.size() + 1);
}

TEST_CASE("filr") {
  Machine m = build_filr_machine();
  CHECK(run(m, builtin_oracle("doubling"), B("")).output == B(""));
  Oracle phi(table({{"", "11"}, {"11", "101"}, {"101", "0110"}}));
  CHECK(run(m, phi, B("1")).output == B("10"));
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    Oracle o = random_function_oracle(200 + i, 8);
    BitString a = random_bits_exact(rng, 1 + i % 6);
    CHECK(run(m, o, a).output.size() <= o(B("")).size());
  }
}

TEST_CASE("selfcomp and zeromax") {
  CHECK(run(build_selfcomp_machine(), Oracle(table({{"1", "00"}, {"00", "111"}})), B("1")).output == B("111"));
  Oracle phi(table({{"", "1"}, {"0", "101"}, {"00", "11"}}));
  Trace t = run(build_zeromax_machine(), phi, B("11"));
  CHECK(t.output == B("000"));
  CHECK(t.events.front().query == B("00"));
  CHECK(metrics(t).lookahead_revisions == 1);
}

TEST_CASE("library machines equal their references") {
  for (const auto& info : library()) {
    CAPTURE(info.name);
    Machine m = info.build();
    for (const auto& c : make_corpus(m, CorpusOptions{500, info.arity, 12, 12, 5000000}, 35)) {
      Oracle o(c.table);
      Trace t = run(m, o, c.input);
      CHECK(t.output == info.reference(o, c.input));
      RunMetrics mt = metrics(t);
      if (info.lookahead_bound) CHECK(mt.lookahead_revisions <= *info.lookahead_bound);
      if (info.length_bound) CHECK(mt.length_revisions <= *info.length_bound);
    }
  }
}

}  // TEST_SUITE
