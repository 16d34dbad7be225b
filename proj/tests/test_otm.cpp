#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "typetwo/corpus.hpp"
#include "typetwo/interpreter.hpp"
#include "typetwo/io.hpp"
#include "typetwo/operators.hpp"

using namespace typetwo;

namespace {

FiniteTable table(std::initializer_list<std::pair<const char*, const char*>> entries, const char* fallback = "") {
  FiniteTable t;
  t.fallback = BitString(fallback);
  for (const auto& [k, v] : entries) t.entries[BitString(k)] = BitString(v);
  return t;
}

const char* kIdentity = "HALT r0";
const char* kQuery = "QUERY r0 r1\nHALT r1";
const char* kCopy = "QUERY r0 r1\nCOPY r1 r2\nHALT r2";

}  // namespace

TEST_SUITE("otm") {

TEST_CASE("run examples") {
  Oracle phi(table({{"101", "11"}}));
  Trace a = run(parse_machine_text(kIdentity), phi, BitString("101"));
  CHECK(a.output == BitString("101"));
  CHECK(a.steps == 1);
  CHECK(a.events.empty());

  Trace b = run(parse_machine_text(kQuery), phi, BitString("101"));
  CHECK(b.output == BitString("11"));
  CHECK(b.steps == 2);
  REQUIRE(b.events.size() == 1);
  CHECK(b.events[0].query_size == 3);
  CHECK(b.events[0].answer_size == 2);

  CHECK(run(parse_machine_text(kCopy), phi, BitString("101")).steps == 1 + (2 + 1) + 1);
}

TEST_CASE("instruction costs") {
  struct Case {
    const char* program;
    const char* input;
    std::uint64_t steps;
  };
  // Costs summed by hand from the cost table.
  std::vector<Case> cases = {
      {"CONST r1 1011\nHALT r1", "", 5 + 1},
      {"COPY r0 r1\nHALT r1", "111", 4 + 1},
      {"APPEND r0 r0\nHALT r0", "11", 3 + 1},
      {"APPENDBIT 1 r0\nDROPLAST r0\nDROPLAST r1\nHALT r0", "0", 1 + 1 + 1 + 1},
      {"CONST r1 01\nTRUNC r1 r0\nHALT r0", "0000", 3 + 3 + 1},
      {"LENU r0 r1\nHALT r1", "0101", 5 + 1},
      {"PAIR r0 r0 r1\nPROJ1 r1 r2\nHALT r2", "01", 5 + 9 + 1},
      {"CONST r1 1\nJLE r0 r1 end\nend: HALT r0", "000", 2 + 4 + 1},
      {"JEQ r0 r1 end\nend: HALT r0", "00", 3 + 1},
      {"JPREFIX r1 r0 end\nend: HALT r0", "00", 3 + 1},
      {"JZ r0 end\nFIRSTBIT r0 end end\nend: HALT r0", "1", 1 + 1 + 1},
      {"JMP end\nend: QUERY r0 r0\nHALT r0", "1111", 1 + 1 + 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.program);
    CHECK(run(parse_machine_text(c.program), Oracle(), BitString(c.input)).steps == c.steps);
  }
}

TEST_CASE("metrics examples") {
  CHECK(count_lookahead_revisions({}) == 0);
  CHECK(count_length_revisions(4, {}) == 0);
  CHECK(count_lookahead_revisions({2, 2, 3}) == 2);
  CHECK(count_length_revisions(2, {1, 4, 2}) == 1);
  CHECK(count_lookahead_revisions({5, 1, 1}) == 1);
  CHECK(count_length_revisions(9, {0, 0, 0}) == 0);
}

TEST_CASE("metrics agree with the quadratic recount") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> len(0, 8), count(0, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::size_t> q(count(rng)), a(q.size());
    for (auto& x : q) x = len(rng);
    for (auto& x : a) x = len(rng);
    std::size_t input = len(rng);
    CHECK(count_lookahead_revisions(q) == oracles::naive_lookahead(q));
    CHECK(count_length_revisions(input, a) == oracles::naive_length(input, a));
  }
}

TEST_CASE("plain and KS step-count checks") {
  Trace t;
  t.steps = 5;
  t.input = BitString("111");
  CHECK(check_step_count_plain(t, UnaryPolynomial({0, 0, 1})));
  CHECK_FALSE(check_step_count_plain(t, UnaryPolynomial({0, 1})));
  t.input = BitString("11111");
  CHECK(check_step_count_ks(t, UnaryPolynomial({0, 1})));

  // Eight bit operations, then a query answered with ten bits.
  std::string program;
  for (int i = 0; i < 8; ++i) program += "APPENDBIT 1 r1\n";
  program += "QUERY r0 r2\nHALT r2";
  Trace late = run(parse_machine_text(program), Oracle(table({{"1", "1111111111"}})), BitString("1"));
  CHECK(late.steps == 10);
  UnaryPolynomial sq({0, 0, 1});
  CHECK(check_step_count_plain(late, sq));
  CHECK_FALSE(check_step_count_ks(late, sq));
  CHECK_FALSE(oracles::naive_ks(late, sq));
}

TEST_CASE("KS check agrees with the definition on library traces") {
  std::mt19937_64 rng(22);
  for (const auto& info : library()) {
    Machine m = info.build();
    auto corpus = make_corpus(m, CorpusOptions{40, info.arity, 5, 6, 1000000}, 23);
    for (const auto& c : corpus) {
      Trace t = run(m, Oracle(c.table), c.input);
      for (unsigned coeff : {1u, 2u, 5u}) {
        UnaryPolynomial p = UnaryPolynomial::scaled_power(coeff, 2) + UnaryPolynomial::constant(coeff);
        CHECK(check_step_count_ks(t, p) == oracles::naive_ks(t, p));
      }
    }
  }
}

TEST_CASE("oracle_size") {
  CHECK(oracle_size(table({{"0", "111"}}), 1) == 3);
  CHECK(oracle_size(table({}), 5) == 0);
  FiniteTable t = table({{"00", "1111"}}, "1");
  CHECK(oracle_size(t, 1) == 1);
  CHECK(oracle_size(t, 2) == 4);
  CHECK_THROWS_AS(oracle_size(t, kDefaultEnumerationCap + 1), EnumerationCapExceeded);

  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    FiniteTable r = random_table(rng, 6, 5, 7);
    SizeFunction sf = table_size_function(r);
    for (std::size_t n = 0; n <= 7; ++n) {
      std::size_t best = 0;
      for (const auto& s : oracles::all_strings(n)) best = std::max(best, r.lookup(BitString(s)).size());
      CHECK(oracle_size(r, n) == best);
      CHECK(sf(BigNat(n)) == best);
    }
  }
}

TEST_CASE("brute_force_step_count") {
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(brute_force_step_count(parse_machine_text(kIdentity), n) == 1);
    CHECK(brute_force_step_count(parse_machine_text(kQuery), n) == 2);
    CHECK(brute_force_step_count(parse_machine_text(kCopy), n) == n + 3);
  }
  Machine loop = parse_machine_text("top: JMP top");
  CHECK_THROWS_AS(brute_force_step_count(loop, 1, 1000), FuelExhausted);
}

TEST_CASE("fuel") {
  Machine loop = parse_machine_text("top: APPENDBIT 1 r1\nJMP top");
  try {
    run(loop, Oracle(), BitString(""), 101);
    FAIL("expected fuel exhaustion");
  } catch (const FuelExhausted& e) {
    CHECK(e.partial().steps <= 101);
    CHECK_FALSE(e.partial().halted);
  }
  CHECK_THROWS_AS(run(loop, Oracle(), BitString(""), 0), std::invalid_argument);
}

TEST_CASE("determinism and replay") {
  for (const auto& info : library()) {
    Machine m = info.build();
    auto corpus = make_corpus(m, CorpusOptions{30, info.arity, 6, 6, 1000000}, 25);
    for (const auto& c : corpus) {
      Trace a = run(m, Oracle(c.table), c.input), b = run(m, Oracle(c.table), c.input);
      CHECK(trace_to_json(a).dump() == trace_to_json(b).dump());
      Trace r = run(m, Oracle(replay_table(a, BitString("0110"))), c.input);
      CHECK(trace_to_json(r).dump() == trace_to_json(a).dump());
    }
  }
}

TEST_CASE("machine text errors") {
  Machine one = parse_machine_text("HALT r0");
  CHECK(one.code().size() == 1);
  auto line_of = [](const char* text) {
    try {
      parse_machine_text(text);
    } catch (const ValidationError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("JMP nowhere") == 1);
  CHECK(line_of("HALT r0\nFROB r1\nHALT r0") == 2);
  CHECK(line_of("COPY r0 x1\nHALT r0") == 1);
  CHECK(line_of("a: HALT r0\n\na: HALT r0") == 3);
  CHECK(line_of("; comment\nCOPY r0 r1\nJZ r1 gone\nHALT r0") == 3);
  CHECK_THROWS_AS(parse_machine_text(""), ValidationError);
  CHECK_THROWS_AS(parse_machine_text("COPY r0 r1"), ValidationError);
}

TEST_CASE("machine files round trip") {
  namespace fs = std::filesystem;
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(TYPETWO_SOURCE_DIR) / "machines")) {
    if (entry.path().extension() != ".otm") continue;
    ++files;
    CAPTURE(entry.path().string());
    std::string text = read_text_file(entry.path());
    Machine m = parse_machine_text(text);
    CHECK(print_machine_text(m) == text);
    CHECK(parse_machine_text(print_machine_text(m)) == m);
    REQUIRE(is_library_machine(m.name()));
    CHECK(m == library_info(m.name()).build());
  }
  CHECK(files == library().size());
}

}  // TEST_SUITE
