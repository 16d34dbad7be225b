#include <algorithm>

#include "typetwo/lambda.hpp"

namespace typetwo::lambda {

namespace {

const std::vector<std::pair<std::string, std::string>>& bridge_sources() {
  static const std::vector<std::pair<std::string, std::string>> sources = {
      {"rec_via_recprime",
       R"(\phi:0->0->0. \a:0. \b:0. \c:0.
            #recprime (\s:0. \t:0. #trunc (phi s t) b) a (\s:0. b) c)"},
      {"recprime_via_rec",
       R"(\phi:0->0->0. \a:0. \psi:0->0. \c:0.
            #rec (\s:0. \t:0. #ell (phi s t) (psi s)) a
                 (psi (#rec (\s:0. \t:0. #sel psi s t) "" c c)) c)"},
      {"operator_R",
       R"(\psi:0->0. \a:0. #rec (\b:0. \c:0. psi (#pair b c)) (#p13 a) (#p23 a) (#p33 a))"},
      {"const_K", R"(\a:0. #K_append1 (\b:0. b) a)"},
      {"tupler_T", R"(\a:0. \b:0. #K_pair_append1 (\c:0. c) (#tupler (\d:0. a) b))"},
      {"rec_symbol_replacement",
       R"(\phi:0->0->0. \a:0. \b:0. \c:0. #R (\d:0. phi (#p1 d) (#p2 d)) (#tuple3 a b c))"},
      {"argmax_via_T",
       R"(\phi:0->0. \a:0. #unary (phi (#T (\d:0. \t:0. #sel phi d t) "" a a)))"},
      {"filr_as_term", R"(\phi:0->0. \a:0. #rec (\s:0. \t:0. phi (phi t)) "" (phi "") a)"},
  };
  return sources;
}

}  // namespace

Term bridge_term(const std::string& name) {
  for (const auto& [n, src] : bridge_sources()) {
    if (n == name) return parse_term(src);
  }
  throw UnknownConstant("unknown bridge term '" + name + "'");
}

std::vector<std::string> bridge_names() {
  std::vector<std::string> out;
  for (const auto& [n, src] : bridge_sources()) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------- random terms

namespace {

std::size_t min_size(const Type& t) { return t.args().size() + 1; }

struct Generator {
  std::mt19937_64& rng;
  std::vector<std::pair<std::string, Type>> ctx;

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

  // Innermost binding of each name only.
  std::vector<std::pair<std::string, Type>> visible() const {
    std::vector<std::pair<std::string, Type>> out;
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
      bool shadowed = std::any_of(out.begin(), out.end(), [&](const auto& v) { return v.first == it->first; });
      if (!shadowed) out.push_back(*it);
    }
    return out;
  }

  Term literal() {
    std::string bits;
    for (std::size_t n = pick(4); n > 0; --n) bits.push_back(coin(0.5) ? '1' : '0');
    return Term::literal(BitString(bits));
  }

  // Smallest term of the type: abstractions around a literal.
  Term minimal(const Type& t) {
    if (t.is_ground()) return literal();
    std::string x = "x" + std::to_string(ctx.size());
    ctx.emplace_back(x, t.from());
    Term body = minimal(t.to());
    ctx.pop_back();
    return Term::abs(x, t.from(), body);
  }

  // Heads whose type ends in `t` after k arguments.
  struct Head {
    Term term;
    std::vector<Type> args;
  };

  std::vector<Head> heads(const Type& t) {
    std::vector<Term> cands;
    for (const auto& [name, type] : visible()) cands.push_back(Term::var(name, type));
    for (const char* c : {"pair", "p1", "p2", "trunc", "ell", "unary", "sel", "rec", "tupler"}) {
      cands.push_back(Term::constant(c));
    }
    std::vector<Head> out;
    for (const auto& c : cands) {
      std::vector<Type> args;
      Type cur = c.type();
      for (;;) {
        if (cur == t) {
          out.push_back({c, args});
          break;
        }
        if (cur.is_ground()) break;
        args.push_back(cur.from());
        cur = cur.to();
      }
    }
    return out;
  }

  Term gen(const Type& t, std::size_t budget) {
    if (budget <= min_size(t)) return minimal(t);
    std::size_t choice = pick(4);
    if (!t.is_ground() && choice == 0) {
      static const char* names[] = {"x", "y", "z"};
      std::string x = names[pick(3)];
      ctx.emplace_back(x, t.from());
      Term body = gen(t.to(), budget - 1);
      ctx.pop_back();
      return Term::abs(x, t.from(), body);
    }
    if (choice == 1 && budget >= min_size(t) + 3) {
      // beta redex (\y:s. body) arg
      Type s = coin(0.7) ? Type::ground() : Type::arrow(Type::ground(), Type::ground());
      std::size_t rest = budget - 2;
      std::size_t arg_budget = std::max(min_size(s), pick(rest / 2 + 1));
      if (arg_budget + min_size(t) + 1 <= rest) {
        Term arg = gen(s, arg_budget);
        static const char* names[] = {"x", "y", "z"};
        std::string y = names[pick(3)];
        ctx.emplace_back(y, s);
        Term body = gen(t, rest - arg.size() - 1);
        ctx.pop_back();
        return Term::app(Term::abs(y, s, body), arg);
      }
    }
    if (choice >= 2) {
      auto hs = heads(t);
      std::shuffle(hs.begin(), hs.end(), rng);
      for (const auto& h : hs) {
        std::size_t need = 1 + h.args.size();
        for (const auto& a : h.args) need += min_size(a);
        if (need > budget) continue;
        std::size_t spare = budget - need;
        Term acc = h.term;
        for (const auto& a : h.args) {
          std::size_t extra = pick(spare + 1);
          spare -= extra;
          Term arg = gen(a, min_size(a) + extra);
          spare += min_size(a) + extra - arg.size();
          acc = Term::app(acc, arg);
        }
        return acc;
      }
    }
    if (t.is_ground()) return literal();
    return gen(t, budget);
  }
};

}  // namespace

Term random_term(std::mt19937_64& rng, const Type& type, std::size_t max_size) {
  if (max_size < min_size(type)) {
    throw LambdaError("random_term: no term of type " + type.to_string() + " has size <= " +
                      std::to_string(max_size));
  }
  Generator g{rng, {}};
  return g.gen(type, max_size);
}

}  // namespace typetwo::lambda
