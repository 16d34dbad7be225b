#include <algorithm>
#include <mutex>
#include <set>

#include "typetwo/interpreter.hpp"
#include "typetwo/lambda.hpp"

namespace typetwo::lambda {

namespace {

Type t0() { return Type::ground(); }
Type fn(std::initializer_list<Type> args) { return Type::function(args); }

BitString run_machine(const Machine& m, const Oracle& phi, const BitString& input) {
  return run(m, phi, input).output;
}

Value machine_constant(const MachineInfo& info) {
  auto m = std::make_shared<const Machine>(info.build());
  return Value(Value::Fn([m](const Value& phi) {
    Oracle o = as_oracle(phi);
    return unary_fn([m, o](const BitString& x) { return run_machine(*m, o, x); });
  }));
}

std::map<std::string, ConstantDef> library_constants() {
  std::map<std::string, ConstantDef> c;
  Type f1 = fn({t0()});
  Type f2 = fn({t0(), t0()});

  c["pair"] = {f2, binary_fn(pair_encode)};
  c["p1"] = {f1, unary_fn([](const BitString& x) { return tuple_project(1, 2, x); })};
  c["p2"] = {f1, unary_fn([](const BitString& x) { return tuple_project(2, 2, x); })};
  c["p13"] = {f1, unary_fn([](const BitString& x) { return tuple_project(1, 3, x); })};
  c["p23"] = {f1, unary_fn([](const BitString& x) { return tuple_project(2, 3, x); })};
  c["p33"] = {f1, unary_fn([](const BitString& x) { return tuple_project(3, 3, x); })};
  c["tuple3"] = {fn({t0(), t0(), t0()}), Value(Value::Fn([](const Value& a) {
                   return binary_fn([a](const BitString& b, const BitString& x) {
                     return tuple_encode({a.str(), b, x});
                   });
                 }))};
  c["trunc"] = {f2, binary_fn([](const BitString& x, const BitString& b) {
                  return truncate(x, b.size());
                })};
  c["ell"] = {f2, binary_fn([](const BitString& s, const BitString& t) {
                return s.size() <= t.size() ? s : t;
              })};
  c["unary"] = {f1, unary_fn([](const BitString& x) { return BitString::ones(x.size()); })};
  c["sel"] = {fn({f1, t0(), t0()}), Value(Value::Fn([](const Value& psi) {
                return binary_fn([psi](const BitString& s, const BitString& t) {
                  return psi(Value(s)).str().size() > psi(Value(t)).str().size() ? s : t;
                });
              }))};
  c["tupler"] = {fn({f1, t0()}), Value(Value::Fn([](const Value& phi) {
                   BitString first = phi(Value(BitString{})).str();
                   return unary_fn([first](const BitString& a) { return pair_encode(first, a); });
                 }))};

  c["rec"] = {fn({f2, t0(), t0(), t0()}), Value(Value::Fn([](const Value& phi) {
                return Value(Value::Fn([phi](const Value& a) {
                  return binary_fn([phi, a](const BitString& b, const BitString& x) {
                    return rec_ref(as_binary(phi), a.str(), b, x);
                  });
                }));
              }))};
  c["recprime"] = {fn({f2, t0(), f1, t0()}), Value(Value::Fn([](const Value& phi) {
                     return Value(Value::Fn([phi](const Value& a) {
                       return Value(Value::Fn([phi, a](const Value& psi) {
                         return unary_fn([phi, a, psi](const BitString& x) {
                           UnaryRule u = [psi](const BitString& s) { return psi(Value(s)).str(); };
                           return rec_prime_ref(as_binary(phi), a.str(), u, x);
                         });
                       }));
                     }));
                   }))};

  auto r_machine = std::make_shared<const Machine>(build_R_machine());
  c["R"] = {fn({f1, t0()}), Value(Value::Fn([r_machine](const Value& psi) {
              Oracle o = as_oracle(psi, "R-arg");
              return unary_fn([r_machine, o](const BitString& x) { return run_machine(*r_machine, o, x); });
            }))};
  auto t_machine = std::make_shared<const Machine>(build_T_machine());
  c["T"] = {fn({f2, t0(), t0(), t0()}), Value(Value::Fn([t_machine](const Value& phi) {
              Oracle o = tupled_oracle(as_binary(phi), "T-arg");
              return Value(Value::Fn([t_machine, o](const Value& a) {
                return binary_fn([t_machine, o, a](const BitString& b, const BitString& x) {
                  return run_machine(*t_machine, o, tuple_encode({a.str(), b, x}));
                });
              }));
            }))};

  // K_psi(phi) = psi, for two fixed library functions psi.
  Oracle append1 = builtin_oracle("append1");
  Oracle pair_append1 = builtin_oracle("pair-append1");
  c["K_append1"] = {fn({f1, t0()}), Value(Value::Fn([append1](const Value&) {
                      return oracle_value(append1);
                    }))};
  c["K_pair_append1"] = {fn({f1, t0()}), Value(Value::Fn([pair_append1](const Value&) {
                           return oracle_value(pair_append1);
                         }))};

  for (const auto& info : library()) {
    std::string name = "M_" + info.name;
    std::replace(name.begin(), name.end(), '-', '_');
    c[name] = {fn({f1, t0()}), machine_constant(info)};
  }
  return c;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::string, ConstantDef>& registry() {
  static std::map<std::string, ConstantDef> r = library_constants();
  return r;
}

}  // namespace

const ConstantDef& lookup_constant(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw UnknownConstant("unknown constant '#" + name + "'");
  return it->second;  // entries are never erased
}

void register_constant(const std::string& name, Type type, Value value) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& r = registry();
  if (r.count(name)) throw LambdaError("constant '#" + name + "' is already registered");
  r.emplace(name, ConstantDef{std::move(type), std::move(value)});
}

std::vector<std::string> constant_names() {
  std::lock_guard<std::mutex> lock(registry_mutex());
  std::vector<std::string> out;
  for (const auto& [name, def] : registry()) out.push_back(name);
  return out;
}

// ---------------------------------------------------------------- evaluation

Value eval_term(const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw UnboundVariable("unbound variable '" + t.name() + "'");
      return it->second;
    }
    case Term::Kind::Const:
      if (t.literal_value()) return Value(*t.literal_value());
      return lookup_constant(t.name()).value;
    case Term::Kind::Abs:
      return Value(Value::Fn([env, t](const Value& v) {
        Env inner = env;
        inner[t.name()] = v;
        return eval_term(t.body(), inner);
      }));
    case Term::Kind::App: return eval_term(t.fun(), env)(eval_term(t.arg(), env));
  }
  throw LambdaError("eval_term: bad term");
}

// ---------------------------------------------------------------- rewriting

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      break;
    case Term::Kind::Const: break;
    case Term::Kind::Abs:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      break;
    case Term::Kind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      break;
  }
}

std::set<std::string> free_set(const Term& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace

std::vector<std::string> free_variables(const Term& t) {
  auto s = free_set(t);
  return {s.begin(), s.end()};
}

Term substitute(const Term& t, const std::string& x, const Term& s) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.name() == x ? s : t;
    case Term::Kind::Const: return t;
    case Term::Kind::App: return Term::app(substitute(t.fun(), x, s), substitute(t.arg(), x, s));
    case Term::Kind::Abs: {
      if (t.name() == x) return t;
      auto fs = free_set(s);
      if (!fs.count(t.name()) || !free_set(t.body()).count(x)) {
        return Term::abs(t.name(), t.var_type(), substitute(t.body(), x, s));
      }
      std::set<std::string> avoid = fs;
      for (const auto& v : free_set(t.body())) avoid.insert(v);
      avoid.insert(x);
      std::string y = fresh_name(t.name(), avoid);
      Term body = substitute(t.body(), t.name(), Term::var(y, t.var_type()));
      return Term::abs(y, t.var_type(), substitute(body, x, s));
    }
  }
  throw LambdaError("substitute: bad term");
}

Term beta_eta_normalize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: return t;
    case Term::Kind::Abs: {
      Term body = beta_eta_normalize(t.body());
      if (body.kind() == Term::Kind::App && body.arg().kind() == Term::Kind::Var &&
          body.arg().name() == t.name() && !free_set(body.fun()).count(t.name())) {
        return body.fun();
      }
      return Term::abs(t.name(), t.var_type(), body);
    }
    case Term::Kind::App: {
      Term f = beta_eta_normalize(t.fun());
      if (f.kind() == Term::Kind::Abs) {
        return beta_eta_normalize(substitute(f.body(), f.name(), t.arg()));
      }
      return Term::app(f, beta_eta_normalize(t.arg()));
    }
  }
  throw LambdaError("beta_eta_normalize: bad term");
}

std::vector<SectionEntry> section(const std::vector<Term>& terms, std::size_t order) {
  std::vector<SectionEntry> out;
  for (const auto& t : terms) {
    std::size_t level = t.type().level();
    if (level < 1 || level > order || !free_set(t).empty()) continue;
    out.push_back({t, eval_term(t)});
  }
  return out;
}

}  // namespace typetwo::lambda
