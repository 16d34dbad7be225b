#include "doctest.h"
#include "typetwo/corpus.hpp"
#include "typetwo/interpreter.hpp"
#include "typetwo/operators.hpp"
#include "typetwo/transforms.hpp"

using namespace typetwo;

namespace {

BitString B(const char* s) { return BitString(s); }

// M on (phi, a) against N o Mtilde on the same pair.
BitString composed(const Factorization& f, const Oracle& phi, const BitString& a, Trace* n_trace = nullptr) {
  // Budget raises build long priming strings, each bit a step.
  const std::uint64_t fuel = 5'000'000'000;
  Trace t = run(f.n, machine_oracle(f.mtilde, phi, fuel), a, fuel);
  if (n_trace) *n_trace = t;
  return t.output;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("spt_to_mpt on T") {
  const MachineInfo& info = library_info("T");
  Machine t = info.build();
  Machine w = spt_to_mpt(t, info.step_count, 1);
  for (const auto& c : make_corpus(t, CorpusOptions{150, 3, 8, 8, 5000000}, 41)) {
    Oracle o(c.table);
    Trace tw = run(w, o, c.input);
    CHECK_FALSE(is_budget_violation(w, tw));
    CHECK(tw.output == run(t, o, c.input).output);
    CHECK(metrics(tw).lookahead_revisions <= 2);
  }
}

TEST_CASE("spt_to_mpt on a query-free machine and with a small p") {
  Machine id = library_info("identity").build();
  Machine w = spt_to_mpt(id, UnaryPolynomial({1, 1}), 0);
  Trace t = run(w, Oracle(), B("0110"));
  CHECK(t.output == B("0110"));
  CHECK(metrics(t).lookahead_revisions <= 1);

  Machine r = library_info("R").build();
  Machine tight = spt_to_mpt(r, UnaryPolynomial::constant(3), 0);
  Trace v = run(tight, builtin_oracle("pair-append1"), tuple_encode({B(""), B("111"), B("101")}));
  CHECK(is_budget_violation(tight, v));
  CHECK(v.output == budget_violation_output());
}

TEST_CASE("factorize: malformed input and exception shape") {
  const MachineInfo& info = library_info("prefix-max");
  Factorization f = factorize(info.build(), info.step_count, 1);
  Oracle phi = random_function_oracle(7, 6);
  CHECK(run(f.mtilde, phi, pair_encode(B("01"), B("0"))).output == B(""));
  CHECK(run(f.mtilde, phi, B("1")).output == B(""));

  // Single-# messages d#1^{|c'|-|d|} all have payload length |c'| + 1. An
  // answer only counts as a revision once it outgrows Mtilde's whole input.
  Rng rng(42);
  std::size_t seen = 0;
  for (int i = 0; i < 300; ++i) {
    BitString a = random_bits_exact(rng, 1 + i % 4);
    Oracle o("long", [n = a.size()](const BitString& s) { return s.size() == n ? BitString::ones(200) : B("0"); });
    std::size_t cp_len = 5 + i % 12;
    std::string word = random_bits_exact(rng, 6).str() + "#" + std::string(cp_len, '1');
    BitString out = run(f.mtilde, o, pair_encode(a, encode_hash_alphabet(word))).output;
    std::string msg = decode_hash_alphabet(out);
    if (std::count(msg.begin(), msg.end(), '#') == 1) {
      ++seen;
      CHECK(msg.substr(0, msg.find('#')) == a.str());
      std::string pad = msg.substr(msg.find('#') + 1);
      CHECK(pad == std::string(pad.size(), '1'));
      CHECK(msg.size() == cp_len + 1);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("factorize: N rejects bad single-# messages") {
  const MachineInfo& info = library_info("prefix-max");
  Factorization f = factorize(info.build(), info.step_count, 1);
  // For a = "0": W = |a| + 2p(|a|) + 1.
  std::size_t w = 1 + 2 * info.step_count.eval_u64(1) + 1;
  auto constant = [](std::string msg) {
    return Oracle("msg", [msg](const BitString&) { return encode_hash_alphabet(msg); });
  };
  Trace bad_pad = run(f.n, constant("1#0"), B("0"));
  CHECK(bad_pad.output == B(""));
  CHECK(bad_pad.events.size() == 1);
  // A well-formed message is accepted once; repeating the same d is refused.
  Trace repeat = run(f.n, constant("1#" + std::string(w - 1, '1')), B("0"));
  CHECK(repeat.output == B(""));
  CHECK(repeat.events.size() == 2);
}

TEST_CASE("factorize: composition equals the machine") {
  struct Item {
    const char* name;
    std::size_t r;
  };
  for (const Item& item : {Item{"R", 1}, Item{"prefix-max", 1}, Item{"filr", 25}}) {
    CAPTURE(item.name);
    const MachineInfo& info = library_info(item.name);
    Machine m = info.build();
    Factorization f = factorize(m, info.step_count, item.r);
    std::vector<Case> cases = make_corpus(m, CorpusOptions{100, info.arity, 8, 8, 5000000}, 43);
    // Short inputs with long answers reach the exception messages.
    for (auto& c : make_corpus(m, CorpusOptions{60, info.arity, 1, 600, 50000000}, 45)) cases.push_back(c);
    for (const auto& c : cases) {
      Oracle o(c.table);
      Trace nt;
      CHECK(composed(f, o, c.input, &nt) == run(m, o, c.input).output);
      CHECK(metrics(nt).length_revisions <= 2 * item.r + 1);
    }
  }
}

TEST_CASE("inline_compose") {
  Machine q = library_info("query").build();
  Machine qq = inline_compose(q, q);
  Oracle phi = random_function_oracle(9, 6);
  Trace t = run(qq, phi, B("0101"));
  Trace ref = run(q, machine_oracle(q, phi), B("0101"));
  CHECK(t.output == phi(B("0101")));
  CHECK(t.output == ref.output);
  CHECK(t.events.size() == 1);
  CHECK(t.events[0].query == B("0101"));
}

TEST_CASE("budgeted_compose agrees with inline_compose") {
  const MachineInfo& zm = library_info("zeromax");
  const MachineInfo& sc = library_info("selfcomp");
  Machine inl = inline_compose(zm.build(), sc.build());
  Machine bud = budgeted_compose(zm.build(), zm.step_count, sc.build(), sc.step_count);
  Rng rng(44);
  for (int i = 0; i < 200; ++i) {
    Oracle o(random_table(rng, 8, 6, 8));
    BitString a = random_bits(rng, 6);
    CHECK(run(inl, o, a).output == run(bud, o, a).output);
  }
  std::size_t last = 0;
  for (std::size_t k = 2; k <= 8; ++k) {
    Oracle adv = selfcomp_adversary(k);
    std::size_t li = metrics(run(inl, adv, BitString::zeros(k))).lookahead_revisions;
    std::size_t lb = metrics(run(bud, adv, BitString::zeros(k))).lookahead_revisions;
    CHECK(li > last);
    CHECK(lb <= 4);
    last = li;
  }
}

TEST_CASE("iteration adversary") {
  SizeFunction succ = [](const BigNat& x) { return x + 1; };
  Oracle phi = iteration_adversary(succ, 2);
  CHECK(phi(B("0")) == B("0000"));
  CHECK(phi(B("0000")) == B("00000"));
  CHECK(phi(B("11")) == B(""));
  CHECK(phi(B("")) == B(""));

  const MachineInfo& info = library_info("iteration");
  Machine m = info.build();
  std::size_t last = 0;
  for (std::uint64_t n = 1; n <= 6; ++n) {
    std::size_t la = metrics(run(m, iteration_adversary(info.step_count.as_size_function(), n),
                                 BitString::zeros(n))).lookahead_revisions;
    CHECK(la >= n);
    CHECK(la > last);
    last = la;
  }
}

TEST_CASE("selfcomp adversary") {
  Oracle phi = selfcomp_adversary(2);
  CHECK(phi(B("")) == B("0000"));
  CHECK(phi(B("0")) == B("000"));
  CHECK(phi(B("00")) == B("00"));
  CHECK(phi(B("1")) == B(""));
  Oracle big = selfcomp_adversary(7);
  for (std::size_t n = 0; n <= 7; ++n) CHECK(big(BitString::zeros(n)).size() == 14 - n);
}

TEST_CASE("filr adversary") {
  // Smallest m > p(k) with (p+1)^k(m) < 2^m - k - 2, for p(n) = n^2 and k = 2.
  std::uint64_t expect = 0;
  for (std::uint64_t m = 5; m < 60 && !expect; ++m) {
    std::uint64_t v = m * m + 1;
    v = v * v + 1;
    if (v + 4 < (std::uint64_t{1} << m)) expect = m;
  }
  CHECK(expect == 17);
  CHECK(filr_adversary_m(UnaryPolynomial({0, 0, 1}), 2) == expect);
  CHECK_THROWS_AS(filr_adversary_m(UnaryPolynomial({0, 0, 1}), 2, 10), EnumerationCapExceeded);

  const MachineInfo& info = library_info("filr");
  FilrAdversary adv = filr_adversary(info.build(), info.step_count, 3);
  REQUIRE(adv.psi.size() == 4);
  REQUIRE(adv.a.size() == 3);
  CHECK(adv.psi[0](B("")) == B(""));
  CHECK(adv.psi[0](BitString::ones(adv.m)) == B(""));
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(adv.a[j].size() == adv.m);
    CHECK(adv.a[j] != BitString::ones(adv.m));
    for (std::size_t i = 0; i < j; ++i) CHECK(adv.a[i] != adv.a[j]);
  }
  CHECK(adv.psi[1](B("")) == adv.a[0]);
  CHECK(adv.psi[1](adv.a[0]) == BitString::ones(adv.m));
}

}  // TEST_SUITE
