#include "typetwo/cli.hpp"

#include <iostream>
#include <sstream>

#include "cli_internal.hpp"
#include "typetwo/interpreter.hpp"
#include "typetwo/lambda.hpp"
#include "typetwo/operators.hpp"
#include "typetwo/transforms.hpp"

namespace typetwo {

namespace cli {

BitString parse_bits(const std::string& text) {
  try {
    return BitString(text);
  } catch (const MalformedEncoding&) {
    throw UsageError("'" + text + "' is not a string of 0s and 1s");
  }
}

BitString parse_tuple(const std::string& text) {
  std::vector<BitString> parts;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    parts.push_back(parse_bits(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts.size() == 1 ? parts[0] : tuple_encode(parts);
}

BitString input_from(const std::optional<std::string>& input, const std::optional<std::string>& tuple) {
  if (input.has_value() == tuple.has_value()) {
    throw UsageError("give exactly one of --input and --input-tuple");
  }
  return input ? parse_bits(*input) : parse_tuple(*tuple);
}

UnaryPolynomial poly_or_library(const std::optional<std::string>& text, const std::string& machine,
                                const char* flag) {
  if (text) return UnaryPolynomial::parse(*text);
  if (is_library_machine(machine)) return library_info(machine).step_count;
  throw UsageError(std::string(flag) + " is required for machines outside the library");
}

void emit(Context& ctx, const Json& j) { ctx.out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- run

void add_run(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string machine, oracle = "empty";
    std::optional<std::string> input, tuple, step_count, sop, trace;
    std::uint64_t fuel = 1000000;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("run", "Run a machine on an oracle and an input");
  sub->add_option("--machine", o->machine, "Library machine name or .otm file")->required();
  sub->add_option("--oracle", o->oracle, "Builtin oracle name or oracle JSON file");
  sub->add_option("--input", o->input, "Input bits");
  sub->add_option("--input-tuple", o->tuple, "Comma-separated components, tupled");
  sub->add_option("--fuel", o->fuel, "Step budget");
  sub->add_option("--step-count", o->step_count, "Polynomial p to check, e.g. n^2+n");
  sub->add_option("--sop", o->sop, "Second-order bound P to check (finite-table oracles)");
  sub->add_option("--trace", o->trace, "Write the trace JSON here");
  sub->callback([o, &ctx] {
    BitString input = input_from(o->input, o->tuple);
    Machine m = load_machine(o->machine);
    Oracle phi = load_oracle(o->oracle);
    std::optional<UnaryPolynomial> p;
    std::optional<SecondOrderPolynomial> big_p;
    if (o->step_count) p = UnaryPolynomial::parse(*o->step_count);
    if (o->sop) {
      big_p = SecondOrderPolynomial::parse(*o->sop);
      if (!phi.is_table()) throw UsageError("--sop needs an oracle given as a finite table");
    }
    Json report{{"machine", m.name()}, {"oracle", o->oracle}, {"input", input.str()}};
    Trace t;
    try {
      t = run(m, phi, input, o->fuel);
    } catch (const FuelExhausted& e) {
      RunMetrics mt = metrics(e.partial());
      report["fuel_exhausted"] = true;
      report["steps"] = e.partial().steps;
      report["m"] = mt.m;
      report["lookahead_revisions"] = mt.lookahead_revisions;
      report["length_revisions"] = mt.length_revisions;
      throw Exit{2, report};
    }
    RunMetrics mt = metrics(t);
    report["output"] = t.output.str();
    report["steps"] = t.steps;
    report["m"] = mt.m;
    report["lookahead_revisions"] = mt.lookahead_revisions;
    report["length_revisions"] = mt.length_revisions;
    bool violation = is_budget_violation(m, t);
    report["budget_violation"] = violation;
    if (p || big_p) {
      Json v = Json::object();
      if (p) {
        v["plain"] = check_step_count_plain(t, *p);
        v["ks"] = check_step_count_ks(t, *p);
      }
      if (big_p) {
        BigNat bound = eval_sop(*big_p, table_size_function(phi.table()), BigNat(input.size()));
        v["sop"] = BigNat(t.steps) <= bound;
        v["sop_bound"] = bound.str();
      }
      report["verdicts"] = v;
    }
    if (o->trace) write_text_file(*o->trace, trace_to_json(t).dump(2) + "\n");
    if (violation) throw Exit{2, report};
    emit(ctx, report);
  });
}

// ---------------------------------------------------------------- small commands

void add_print(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string machine;
    std::optional<std::string> out;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("print", "Pretty-print a machine as machine text");
  sub->add_option("--machine", o->machine, "Library machine name or .otm file")->required();
  sub->add_option("--out", o->out, "Write the text here and report as JSON");
  sub->callback([o, &ctx] {
    Machine m = load_machine(o->machine);
    std::string text = print_machine_text(m);
    if (!o->out) {
      ctx.out << text;
      return;
    }
    write_text_file(*o->out, text);
    emit(ctx, Json{{"machine", m.name()}, {"instructions", m.code().size()}, {"out", *o->out}});
  });
}

void add_sop(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string expr, l = "n";
    std::optional<std::string> oracle;
    std::uint64_t n = 0;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("sop", "Evaluate a second-order polynomial");
  sub->add_option("--expr", o->expr, "Polynomial over n, +, *, l(...)")->required();
  sub->add_option("--n", o->n, "Value of the first-order variable");
  sub->add_option("--l", o->l, "Unary polynomial used as the size function");
  sub->add_option("--oracle", o->oracle, "Use the size function of this finite-table oracle");
  sub->callback([o, &ctx] {
    SecondOrderPolynomial p = SecondOrderPolynomial::parse(o->expr);
    SizeFunction l = UnaryPolynomial::parse(o->l).as_size_function();
    std::string l_name = o->l;
    if (o->oracle) {
      Oracle phi = load_oracle(*o->oracle);
      if (!phi.is_table()) throw UsageError("--oracle must be a finite table");
      l = table_size_function(phi.table());
      l_name = *o->oracle;
    }
    emit(ctx, Json{{"expr", p.to_string()},
                   {"n", o->n},
                   {"l", l_name},
                   {"value", eval_sop(p, l, BigNat(o->n)).str()},
                   {"step_count", step_count_from_bound(p).to_string()}});
  });
}

void add_brute_force(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string machine;
    std::size_t n = 2;
    std::uint64_t fuel = 1000000;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("brute-force", "Largest step count over inputs and answers of length <= n");
  sub->add_option("--machine", o->machine, "Library machine name or .otm file")->required();
  sub->add_option("--n", o->n, "Length bound");
  sub->add_option("--fuel", o->fuel, "Step budget per run");
  sub->callback([o, &ctx] {
    Machine m = load_machine(o->machine);
    std::uint64_t best = brute_force_step_count(m, o->n, o->fuel);
    emit(ctx, Json{{"machine", m.name()}, {"n", o->n}, {"max_steps", best}});
  });
}

void add_oracle_size(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string oracle;
    std::size_t n = 0;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("oracle-size", "Size function |phi|(n) of a finite-table oracle");
  sub->add_option("--oracle", o->oracle, "Oracle JSON file")->required();
  sub->add_option("--n", o->n, "Argument")->required();
  sub->callback([o, &ctx] {
    Oracle phi = load_oracle(o->oracle);
    if (!phi.is_table()) throw UsageError("--oracle must be a finite table");
    emit(ctx, Json{{"oracle", o->oracle}, {"n", o->n}, {"size", oracle_size(phi.table(), o->n)}});
  });
}

}  // namespace cli

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace cli;
  Context ctx{out, err};
  CLI::App app{"Oracle machines, operator transforms and typed lambda terms", "typetwo"};
  app.require_subcommand(1);
  add_run(app, ctx);
  add_print(app, ctx);
  add_sop(app, ctx);
  add_brute_force(app, ctx);
  add_oracle_size(app, ctx);
  add_lambda(app, ctx);
  add_factorize(app, ctx);
  add_spt_to_mpt(app, ctx);
  add_inline_compose(app, ctx);
  add_budgeted_compose(app, ctx);
  add_adversary(app, ctx);

  auto usage = [&](const std::string& msg) {
    err << "error: " << msg << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 1;
  };
  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  } catch (const Exit& e) {
    out << e.report.dump(2) << "\n";
    return e.code;
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const MalformedEncoding& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const lambda::LambdaError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const FuelExhausted& e) {
    err << "error: fuel exhausted after " << e.partial().steps << " steps\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace typetwo
