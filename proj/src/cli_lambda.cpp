#include "cli_internal.hpp"
#include "typetwo/lambda.hpp"
#include "typetwo/operators.hpp"

namespace typetwo::cli {

namespace {

using lambda::Term;
using lambda::Type;
using lambda::Value;

// Ground arguments are bit strings; 0 -> 0 arguments name an oracle; 0 -> 0 -> 0
// arguments name an oracle read through the pairing function.
Value argument_value(const Type& type, const std::string& text) {
  if (type.is_ground()) return Value(parse_bits(text));
  Type unary = Type::arrow(Type::ground(), Type::ground());
  Type binary = Type::arrow(Type::ground(), unary);
  Oracle phi = load_oracle(text);
  if (type == unary) return lambda::oracle_value(phi);
  if (type == binary) return lambda::binary_fn(untupled(phi));
  throw UsageError("no command-line form for arguments of type " + type.to_string());
}

}  // namespace

void add_lambda(CLI::App& app, Context& ctx) {
  struct Opts {
    std::optional<std::string> term, expr, bridge;
    std::vector<std::string> args;
    bool normalize = false;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("lambda", "Evaluate a typed lambda term on strings and oracles");
  sub->add_option("--term", o->term, "File holding a closed term");
  sub->add_option("--expr", o->expr, "Closed term given inline");
  sub->add_option("--bridge", o->bridge, "One of the built-in bridge terms");
  sub->add_option("--arg", o->args, "Arguments in order: bits, or an oracle for function arguments");
  sub->add_flag("--normalize", o->normalize, "Also report the beta/eta normal form");
  sub->callback([o, &ctx] {
    int given = o->term.has_value() + o->expr.has_value() + o->bridge.has_value();
    if (given != 1) throw UsageError("give exactly one of --term, --expr and --bridge");
    Term t = o->bridge ? lambda::bridge_term(*o->bridge)
                       : lambda::parse_term(o->expr ? *o->expr : read_text_file(*o->term));
    std::vector<Type> arg_types = t.type().args();
    if (o->args.size() != arg_types.size()) {
      throw UsageError("the term takes " + std::to_string(arg_types.size()) + " arguments, got " +
                       std::to_string(o->args.size()));
    }
    Value v = lambda::eval_term(t);
    for (std::size_t i = 0; i < arg_types.size(); ++i) v = v(argument_value(arg_types[i], o->args[i]));
    Json report{{"term", t.to_string()}, {"type", t.type().to_string()}, {"level", t.type().level()}};
    if (o->bridge) report["bridge"] = *o->bridge;
    report["args"] = o->args;
    if (o->normalize) report["normal_form"] = lambda::beta_eta_normalize(t).to_string();
    report["output"] = v.str().str();
    emit(ctx, report);
  });
}

}  // namespace typetwo::cli
