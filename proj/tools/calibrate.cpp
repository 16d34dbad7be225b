// Fits the constants frozen in src/library.cpp. For each library machine it
// runs a seeded corpus, adds the eps-truncated replay of every trace, and
// reports the smallest constant that makes the plain step-count and the
// second-order bound hold on all of them, scaled from the current constant.
#include <cstdio>

#include "typetwo/corpus.hpp"
#include "typetwo/operators.hpp"

using namespace typetwo;

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  for (const auto& info : library()) {
    Machine m = info.build();
    CorpusOptions opt;
    opt.arity = info.arity;
    opt.count = 400;
    auto corpus = make_corpus(m, opt, seed);
    double need_p = 0, need_bound = 0;
    for (const auto& c : corpus) {
      Trace base = run(m, Oracle(c.table), c.input);
      std::vector<FiniteTable> tables{c.table};
      for (std::size_t j = 0; j <= base.events.size(); ++j) tables.push_back(truncated_replay_table(base, j));
      for (const auto& table : tables) {
        Trace t = run(m, Oracle(table), c.input);
        double steps = static_cast<double>(t.steps);
        double p = info.step_count(BigNat(metrics(t).m)).convert_to<double>();
        need_p = std::max(need_p, steps / p);
        if (info.bound) {
          double b = eval_sop(*info.bound, table_size_function(table), BigNat(c.input.size()))
                         .convert_to<double>();
          need_bound = std::max(need_bound, steps / b);
        }
      }
    }
    std::printf("%-12s step-count ratio %.3f  bound ratio %.3f\n", info.name.c_str(), need_p, need_bound);
  }
}
