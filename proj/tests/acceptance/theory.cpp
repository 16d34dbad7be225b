#include <cmath>

#include "common.hpp"

namespace acceptance {

namespace {

CorpusOptions small_corpus(std::size_t count, std::size_t arity) {
  return CorpusOptions{count, arity, 8, 8, 5'000'000};
}

// Every run of m on an oracle in K_n (inputs and answers of length <= n)
// stays within brute_force_step_count(m, n).
void check_brute_force(Verdict& v, const MachineInfo& info) {
  Machine m = info.build();
  std::uint64_t seed = kEvalSeed;
  for (std::size_t n = 0; n <= 3; ++n) {
    std::uint64_t bound = brute_force_step_count(m, n);
    std::uint64_t worst = 0;
    for (std::size_t len = 0; len <= n; ++len) {
      for (const auto& a : all_strings_of_length(len)) {
        for (int rep = 0; rep < 40; ++rep) {
          worst = std::max(worst, run(m, random_function_oracle(++seed, n), a).steps);
        }
      }
    }
    v.check(worst <= bound, info.name + " brute force bound " + std::to_string(bound) + " < observed " +
                                std::to_string(worst) + " at n=" + str(n));
  }
}

}  // namespace

Verdict criterion_step_counts() {
  Verdict v;
  std::size_t machines = 0, traces = 0;
  for (const auto& info : library()) {
    Machine m = info.build();
    for (const auto& k : make_corpus(m, small_corpus(300, info.arity), kEvalSeed)) {
      Trace t = run(m, Oracle(k.table), k.input);
      if (info.bound) {
        BigNat b = eval_sop(*info.bound, table_size_function(k.table), BigNat(k.input.size()));
        v.check(BigNat(t.steps) <= b, info.name + " exceeds its second-order bound");
        v.check(check_step_count_plain(t, step_count_from_bound(*info.bound)),
                info.name + " step_count_from_bound fails the plain check");
      }
      v.check(check_step_count_plain(t, info.step_count), info.name + " fitted step-count fails plain");
      v.check(check_step_count_ks(t, info.step_count), info.name + " fitted step-count fails KS");
      ++traces;
    }
    ++machines;
  }
  v.note(str(machines) + " machines, " + str(traces) + " traces");
  for (const char* toy : {"identity", "query", "query-copy"}) check_brute_force(v, library_info(toy));
  return v;
}

Verdict criterion_bounds() {
  Verdict v;
  for (const char* name : {"R", "filr"}) {
    const MachineInfo& info = library_info(name);
    Machine m = info.build();
    std::size_t max_r = 0;
    for (const auto& k : make_corpus(m, small_corpus(300, info.arity), kEvalSeed)) {
      Trace t = run(m, Oracle(k.table), k.input);
      auto r = static_cast<unsigned>(metrics(t).lookahead_revisions);
      max_r = std::max<std::size_t>(max_r, r);
      BigNat b = eval_sop(mpt_time_bound(info.step_count, r), table_size_function(k.table),
                          BigNat(k.input.size()));
      v.check(BigNat(t.steps) <= b, std::string(name) + " exceeds the MPT time bound");
    }
    v.note(std::string(name) + " max lookahead " + str(max_r));
  }

  // Outer machine first; its queries are answered by the inner machine.
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"zeromax", "selfcomp"}, {"prefix-max", "selfcomp"}, {"query-copy", "query"},
      {"zeromax", "query-copy"}, {"prefix-max", "query"}};
  auto ratio_over = [&](std::uint64_t seed, auto&& visit) {
    for (const auto& [outer, inner] : pairs) {
      const MachineInfo& o = library_info(outer);
      const MachineInfo& i = library_info(inner);
      Machine c = inline_compose(o.build(), i.build());
      for (const auto& k : make_corpus(c, small_corpus(200, 1), seed)) {
        Trace t = run(c, Oracle(k.table), k.input);
        BigNat unit = composition_bound(*i.bound, *o.bound, 1, table_size_function(k.table),
                                        BigNat(k.input.size()));
        visit(t, unit, std::string(outer) + "/" + inner);
      }
    }
  };
  double need = 0;
  ratio_over(kCalibrationSeed, [&](const Trace& t, const BigNat& unit, const std::string&) {
    need = std::max(need, static_cast<double>(t.steps) / unit.convert_to<double>());
  });
  BigNat c(static_cast<std::uint64_t>(std::max(1.0, std::ceil(need * kHeadroom))));
  ratio_over(kEvalSeed, [&](const Trace& t, const BigNat& unit, const std::string& tag) {
    v.check(BigNat(t.steps) <= c * unit, tag + " exceeds the composition bound");
  });
  v.note("fitted C=" + c.str());
  return v;
}

}  // namespace acceptance
