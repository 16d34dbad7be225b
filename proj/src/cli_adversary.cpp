#include <filesystem>

#include "cli_internal.hpp"
#include "typetwo/operators.hpp"
#include "typetwo/transforms.hpp"

namespace typetwo::cli {

namespace fs = std::filesystem;

namespace {

Json run_summary(const Trace& t) {
  RunMetrics mt = metrics(t);
  return Json{{"steps", t.steps},
              {"output_length", t.output.size()},
              {"lookahead_revisions", mt.lookahead_revisions},
              {"length_revisions", mt.length_revisions}};
}

void save_replay(const std::optional<std::string>& dir, const std::string& file, const Trace& t,
                 Json& report) {
  if (!dir) return;
  fs::create_directories(*dir);
  fs::path path = fs::path(*dir) / file;
  write_text_file(path, oracle_to_json(replay_table(t, BitString{})).dump(2) + "\n");
  report["oracle_file"] = path.string();
}

Json iteration_report(std::uint64_t n, const std::optional<std::string>& dir) {
  Machine m = library_info("iteration").build();
  SizeFunction t = library_info("iteration").step_count.as_size_function();
  Trace tr = run(m, iteration_adversary(t, n), BitString::zeros(n));
  Json report = run_summary(tr);
  report["kind"] = "iteration";
  report["n"] = n;
  report["forced"] = metrics(tr).lookahead_revisions >= n;
  save_replay(dir, "iteration_n" + std::to_string(n) + ".json", tr, report);
  return report;
}

Json filr_report(std::size_t k, const std::optional<std::string>& dir) {
  const MachineInfo& info = library_info("filr");
  Machine m = info.build();
  FilrAdversary adv = filr_adversary(m, info.step_count, k);
  Json psis = Json::array();
  for (std::size_t i = 0; i < adv.psi.size(); ++i) {
    Trace tr = run(m, adv.psi[i], BitString::ones(k));
    Json entry = run_summary(tr);
    entry["i"] = i;
    entry["forced"] = metrics(tr).lookahead_revisions >= i;
    save_replay(dir, "filr_psi" + std::to_string(i) + ".json", tr, entry);
    psis.push_back(entry);
  }
  Json a = Json::array();
  for (const auto& s : adv.a) a.push_back(s.str());
  return Json{{"kind", "filr"}, {"k", k}, {"m", adv.m}, {"a", a}, {"psi", psis}};
}

Json selfcomp_report(std::size_t k) {
  const MachineInfo& zm = library_info("zeromax");
  const MachineInfo& sc = library_info("selfcomp");
  Machine outer = zm.build(), inner = sc.build();
  Machine plain = inline_compose(outer, inner);
  Machine budgeted = budgeted_compose(outer, zm.step_count, inner, sc.step_count);
  Oracle phi = selfcomp_adversary(k);
  BitString input = BitString::zeros(k);
  Trace a = run(plain, phi, input), b = run(budgeted, phi, input);
  return Json{{"kind", "selfcomp"},
              {"k", k},
              {"inline", run_summary(a)},
              {"budgeted", run_summary(b)},
              {"outputs_equal", a.output == b.output}};
}

}  // namespace

void add_adversary(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string kind;
    std::uint64_t n = 4;
    std::size_t k = 3;
    std::optional<std::string> out_dir;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("adversary", "Build an adversarial oracle and report the revisions it forces");
  sub->add_option("kind", o->kind, "iteration, filr or selfcomp")
      ->required()
      ->check(CLI::IsMember({"iteration", "filr", "selfcomp"}));
  sub->add_option("--n", o->n, "Input length for iteration");
  sub->add_option("--k", o->k, "Parameter k for filr and selfcomp");
  sub->add_option("--out-dir", o->out_dir, "Write the queried part of each oracle as JSON here");
  sub->callback([o, &ctx] {
    if (o->kind == "iteration") {
      emit(ctx, iteration_report(o->n, o->out_dir));
    } else if (o->kind == "filr") {
      emit(ctx, filr_report(o->k, o->out_dir));
    } else {
      emit(ctx, selfcomp_report(o->k));
    }
  });
}

}  // namespace typetwo::cli
