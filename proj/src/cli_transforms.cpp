#include <filesystem>

#include "cli_internal.hpp"
#include "typetwo/corpus.hpp"
#include "typetwo/operators.hpp"
#include "typetwo/transforms.hpp"

namespace typetwo::cli {

namespace fs = std::filesystem;

namespace {

std::size_t arity_of(const std::string& machine, std::size_t given) {
  if (given > 0) return given;
  return is_library_machine(machine) ? library_info(machine).arity : 1;
}

// Runs `expect` and `actual` on `cases` random oracles and inputs.
template <class Expect, class Actual>
Json compare_on_corpus(std::size_t cases, std::size_t arity, std::uint64_t seed, Expect expect, Actual actual) {
  Rng rng(seed);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    Oracle phi = random_function_oracle(seed + i, 8);
    BitString a = random_input(rng, arity, 8);
    if (expect(phi, a) != actual(phi, a)) ++mismatches;
  }
  return Json{{"cases", cases}, {"mismatches", mismatches}, {"passed", mismatches == 0}};
}

void write_machine(const fs::path& path, const Machine& m) { write_text_file(path, print_machine_text(m)); }

}  // namespace

void add_factorize(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string machine, out_dir = ".";
    std::optional<std::string> p;
    std::size_t r = 1, check = 0, arity = 0;
    std::uint64_t seed = kDefaultSeed;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("factorize", "Split a machine into Mtilde and N with finite length revision");
  sub->add_option("--machine", o->machine, "Library machine name or .otm file")->required();
  sub->add_option("--p", o->p, "Plain step-count of the machine (library default)");
  sub->add_option("--r", o->r, "Length revisions allowed to N are 2r+1");
  sub->add_option("--out-dir", o->out_dir, "Directory for Mtilde.otm, N.otm and manifest.json");
  sub->add_option("--check", o->check, "Compare N o Mtilde with the machine on this many random cases");
  sub->add_option("--arity", o->arity, "Tupled input components for --check");
  sub->add_option("--seed", o->seed, "Seed for --check");
  sub->callback([o, &ctx] {
    Machine m = load_machine(o->machine);
    UnaryPolynomial p = poly_or_library(o->p, o->machine, "--p");
    Factorization f = factorize(m, p, o->r);
    fs::path dir(o->out_dir);
    fs::create_directories(dir);
    write_machine(dir / "Mtilde.otm", f.mtilde);
    write_machine(dir / "N.otm", f.n);
    Json manifest{{"machine", m.name()},  {"p", p.to_string()},
                  {"r", o->r},            {"tupling", "dbl-11"},
                  {"hash_encoding", "00/01/11"}, {"seed", o->seed},
                  {"mtilde", "Mtilde.otm"}, {"n", "N.otm"}};
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
    Json report{{"manifest", manifest},
                {"out_dir", dir.string()},
                {"mtilde_instructions", f.mtilde.code().size()},
                {"n_instructions", f.n.code().size()}};
    if (o->check > 0) {
      report["composition"] = compare_on_corpus(
          o->check, arity_of(o->machine, o->arity), o->seed,
          [&](const Oracle& phi, const BitString& a) { return run(m, phi, a).output; },
          [&](const Oracle& phi, const BitString& a) {
            return run(f.n, machine_oracle(f.mtilde, phi), a).output;
          });
    }
    emit(ctx, report);
  });
}

void add_spt_to_mpt(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string machine, out;
    std::optional<std::string> p;
    std::size_t r = 1, check = 0, arity = 0;
    std::uint64_t seed = kDefaultSeed;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("spt-to-mpt", "Phase simulation with finite lookahead revision");
  sub->add_option("--machine", o->machine, "Library machine name or .otm file")->required();
  sub->add_option("--p", o->p, "Plain step-count (library default)");
  sub->add_option("--r", o->r, "Length revisions of the machine");
  sub->add_option("--out", o->out, "Output .otm file")->required();
  sub->add_option("--check", o->check, "Compare outputs on this many random cases");
  sub->add_option("--arity", o->arity, "Tupled input components for --check");
  sub->add_option("--seed", o->seed, "Seed for --check");
  sub->callback([o, &ctx] {
    Machine m = load_machine(o->machine);
    UnaryPolynomial p = poly_or_library(o->p, o->machine, "--p");
    Machine w = spt_to_mpt(m, p, o->r);
    write_machine(o->out, w);
    Json report{{"machine", w.name()}, {"p", p.to_string()}, {"r", o->r},
                {"instructions", w.code().size()}, {"out", o->out}};
    if (o->check > 0) {
      report["check"] = compare_on_corpus(
          o->check, arity_of(o->machine, o->arity), o->seed,
          [&](const Oracle& phi, const BitString& a) { return run(m, phi, a).output; },
          [&](const Oracle& phi, const BitString& a) { return run(w, phi, a).output; });
    }
    emit(ctx, report);
  });
}

void add_inline_compose(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string outer, inner, out;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("inline-compose", "Replace each query of outer by a copy of inner");
  sub->add_option("--outer", o->outer, "Outer machine")->required();
  sub->add_option("--inner", o->inner, "Inner machine")->required();
  sub->add_option("--out", o->out, "Output .otm file")->required();
  sub->callback([o, &ctx] {
    Machine c = inline_compose(load_machine(o->outer), load_machine(o->inner));
    write_machine(o->out, c);
    emit(ctx, Json{{"machine", c.name()}, {"instructions", c.code().size()}, {"out", o->out}});
  });
}

void add_budgeted_compose(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string outer, inner, out;
    std::optional<std::string> p, q;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("budgeted-compose", "Composition whose inner copies prime with a budget tag");
  sub->add_option("--outer", o->outer, "Outer machine")->required();
  sub->add_option("--p", o->p, "Step-count of outer (library default)");
  sub->add_option("--inner", o->inner, "Inner machine")->required();
  sub->add_option("--q", o->q, "Step-count of inner (library default)");
  sub->add_option("--out", o->out, "Output .otm file")->required();
  sub->callback([o, &ctx] {
    UnaryPolynomial p = poly_or_library(o->p, o->outer, "--p");
    UnaryPolynomial q = poly_or_library(o->q, o->inner, "--q");
    Machine c = budgeted_compose(load_machine(o->outer), p, load_machine(o->inner), q);
    write_machine(o->out, c);
    emit(ctx, Json{{"machine", c.name()}, {"p", p.to_string()}, {"q", q.to_string()},
                   {"instructions", c.code().size()}, {"out", o->out}});
  });
}

}  // namespace typetwo::cli
