#include <cmath>
#include <memory>

#include "common.hpp"

namespace acceptance {

namespace {

// Step costs count bits moved; priming strings after a budget raise are long.
constexpr std::uint64_t kFactorFuel = 20'000'000'000;

struct FactorRun {
  BitString output;
  Trace n;
  std::vector<Trace> mtilde;
};

// N o Mtilde on (phi, a), keeping the trace of every Mtilde run N triggers.
FactorRun run_factors(const Factorization& f, const Oracle& phi, const BitString& a) {
  auto log = std::make_shared<std::vector<Trace>>();
  Machine mt = f.mtilde;
  Oracle inner("mtilde", [log, mt, phi](const BitString& x) {
    log->push_back(run(mt, phi, x, kFactorFuel));
    return log->back().output;
  });
  FactorRun r;
  r.n = run(f.n, inner, a, kFactorFuel);
  r.output = r.n.output;
  r.mtilde = *log;
  return r;
}

struct Target {
  const char* name;
  std::size_t r;
  // Shape of the third corpus: inputs short enough for answers of up to
  // long_answer bits to outgrow Mtilde's priming budget.
  std::size_t short_component, long_answer;
};

// Short answers, then longer ones, then answers long enough to outgrow
// Mtilde's input and drive N through its exception handling.
std::vector<Case> corpus(const Machine& m, std::size_t arity, const Target& target, std::size_t count,
                         std::uint64_t seed) {
  std::vector<Case> out = make_corpus(m, CorpusOptions{count, arity, 8, 8, 5'000'000}, seed);
  for (auto& c : make_corpus(m, CorpusOptions{count, arity, 8, 160, 5'000'000}, seed + 1)) out.push_back(c);
  // Short inputs keep the priming budget small enough for answers to exceed it.
  CorpusOptions tail{count, arity, target.short_component, target.long_answer, 50'000'000};
  for (auto& c : make_corpus(m, tail, seed + 2)) out.push_back(c);
  return out;
}

double ratio(const Trace& t) {
  double m1 = static_cast<double>(metrics(t).m + 1);
  return static_cast<double>(t.steps) / std::pow(m1, kFactorDegree);
}

// Smallest c with steps <= c(m+1)^d on the calibration corpus and on every
// eps-truncated replay of the original machine's runs, times the headroom.
std::pair<BigNat, BigNat> fit_factors(const Machine& m, const Factorization& f, std::size_t arity,
                                      const Target& target) {
  double need_n = 0, need_mt = 0;
  for (const auto& k : corpus(m, arity, target, 150, kCalibrationSeed)) {
    Trace base = run(m, Oracle(k.table), k.input);
    std::vector<FiniteTable> tables{k.table};
    for (std::size_t j = 0; j < base.events.size(); ++j) tables.push_back(truncated_replay_table(base, j));
    for (const auto& table : tables) {
      FactorRun fr = run_factors(f, Oracle(table), k.input);
      need_n = std::max(need_n, ratio(fr.n));
      for (const auto& t : fr.mtilde) need_mt = std::max(need_mt, ratio(t));
    }
  }
  auto scale = [](double x) { return BigNat(static_cast<std::uint64_t>(std::ceil(x * kHeadroom))); };
  return {scale(need_n), scale(need_mt)};
}

}  // namespace

Verdict criterion_factorize() {
  Verdict v;
  for (const Target& target : {Target{"R", 1, 1, 2400}, Target{"filr", 25, 2, 600}, Target{"prefix-max", 1, 2, 600}}) {
    const MachineInfo& info = library_info(target.name);
    Machine m = info.build();
    Factorization f = factorize(m, info.step_count, target.r);
    auto [cn, cmt] = fit_factors(m, f, info.arity, target);
    UnaryPolynomial pn = UnaryPolynomial::scaled_power(cn, kFactorDegree);
    UnaryPolynomial pmt = UnaryPolynomial::scaled_power(cmt, kFactorDegree);
    std::string tag = std::string(target.name) + ": ";
    std::size_t max_n = 0, max_mt = 0, mt_runs = 0, singles = 0, doubles = 0;
    for (const auto& k : corpus(m, info.arity, target, kCorpus, kEvalSeed)) {
      Oracle o(k.table);
      FactorRun fr = run_factors(f, o, k.input);
      v.check(fr.output == run(m, o, k.input).output, tag + "composition differs on " + k.input.str());
      std::size_t ln = metrics(fr.n).length_revisions;
      max_n = std::max(max_n, ln);
      v.check(ln <= 2 * target.r + 1, tag + "N length revisions " + str(ln));
      v.check(check_step_count_plain(fr.n, pn), tag + "N plain step-count");
      v.check(check_step_count_ks(fr.n, pn), tag + "N KS step-count");
      for (const auto& t : fr.mtilde) {
        std::size_t lm = metrics(t).length_revisions;
        max_mt = std::max(max_mt, lm);
        v.check(lm <= 2, tag + "Mtilde length revisions " + str(lm));
        v.check(check_step_count_plain(t, pmt), tag + "Mtilde plain step-count");
        v.check(check_step_count_ks(t, pmt), tag + "Mtilde KS step-count");
        ++mt_runs;
        std::string msg = decode_hash_alphabet(t.output);
        if (msg.find("##") != std::string::npos) ++doubles;
        else if (msg.find('#') != std::string::npos) ++singles;
      }
    }
    v.note(tag + "N " + pn.to_string() + " (max len rev " + str(max_n) + "), Mtilde " + pmt.to_string() +
           " (max len rev " + str(max_mt) + ", " + str(mt_runs) + " runs, " + str(singles) +
           " #-messages, " + str(doubles) + " ##-messages)");
  }
  return v;
}

}  // namespace acceptance
