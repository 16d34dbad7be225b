#include "typetwo/transforms.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "typetwo/builder.hpp"

namespace typetwo {

BitString budget_violation_output() { return BitString("1010"); }

bool is_budget_violation(const Machine& m, const Trace& t) {
  auto it = m.labels().find(kBudgetViolationLabel);
  return t.halted && it != m.labels().end() && t.halt_pc == it->second + 1;
}

namespace {

void emit_violation_exit(ProgramBuilder& b) {
  Reg v = b.reg();
  b.bind(kBudgetViolationLabel);
  b.konst(v, budget_violation_output());
  b.halt(v);
}

}  // namespace

Machine spt_to_mpt(const Machine& m, const UnaryPolynomial& p, std::size_t r) {
  ProgramBuilder b;
  Reg wm = b.reg(), phases = b.reg(), rcap = b.reg(), budget = b.reg(), prime = b.reg(),
      junk = b.reg(), spent = b.reg();
  std::string phase = b.label("phase"), phase_ok = b.label("phase_ok");
  b.lenu(0, wm);
  b.konst(rcap, BitString::ones(r + 1));
  b.bind(phase);
  b.append_bit(true, phases);
  b.jle(phases, rcap, phase_ok);
  b.jmp(kBudgetViolationLabel);
  b.bind(phase_ok);
  emit_unary_poly(b, p, wm, budget);
  b.copy(wm, prime);
  b.append(budget, prime);
  b.append(budget, prime);
  b.query(prime, junk);
  b.konst(spent);

  InlineHooks hooks;
  hooks.before = [&](ProgramBuilder& bb, const Instruction& ins) {
    emit_charge(bb, ins, spent, budget, kBudgetViolationLabel);
  };
  hooks.on_query = [&](ProgramBuilder& bb, Reg src, Reg dst) {
    std::string cont = bb.label("no_revision");
    bb.query(src, dst);
    bb.jle(dst, wm, cont);
    bb.lenu(dst, wm);
    bb.jmp(phase);
    bb.bind(cont);
  };
  emit_inline(b, m, 0, hooks);
  emit_violation_exit(b);
  return b.build(m.name() + "-mpt");
}

Oracle machine_oracle(const Machine& inner, const Oracle& phi, std::uint64_t fuel) {
  auto shared = std::make_shared<const Machine>(inner);
  return Oracle(inner.name() + "[" + phi.name() + "]",
                [shared, phi, fuel](const BitString& x) { return run(*shared, phi, x, fuel).output; });
}

Machine inline_compose(const Machine& outer, const Machine& inner) {
  ProgramBuilder b;
  InlineHooks outer_hooks;
  outer_hooks.on_query = [&](ProgramBuilder& bb, Reg src, Reg dst) {
    std::string back = bb.label("inner_done");
    InlineHooks inner_hooks;
    inner_hooks.on_halt = [&](ProgramBuilder& bbb, Reg out) {
      bbb.copy(out, dst);
      bbb.jmp(back);
    };
    emit_inline(bb, inner, src, inner_hooks);
    bb.bind(back);
  };
  emit_inline(b, outer, 0, outer_hooks);
  return b.build(outer.name() + "o" + inner.name());
}

// ---------------------------------------------------------------- adversaries

namespace {

bool all_bits(const BitString& s, bool bit) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.bit(i) != bit) return false;
  }
  return true;
}

std::size_t checked_size(const BigNat& n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw EnumerationCapExceeded(std::string(what) + ": answer of " + n.str() +
                                 " bits exceeds the cap " + std::to_string(cap));
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

Oracle iteration_adversary(const SizeFunction& t, std::uint64_t n) {
  constexpr std::size_t kCap = std::size_t{1} << 26;
  return Oracle("iteration-adversary(" + std::to_string(n) + ")", [t, n](const BitString& q) {
    if (q.empty() || !all_bits(q, false)) return BitString{};
    BigNat v = t(BigNat(n));
    if (q.size() == 1) return BitString::zeros(checked_size(v + 1, kCap, "iteration_adversary"));
    BigNat len(q.size());
    while (v + 1 < len) v = t(v);
    if (v + 1 != len) return BitString{};
    return BitString::zeros(checked_size(t(v) + 1, kCap, "iteration_adversary"));
  });
}

Oracle selfcomp_adversary(std::size_t k) {
  return Oracle("selfcomp-adversary(" + std::to_string(k) + ")", [k](const BitString& q) {
    if (q.size() > k || !all_bits(q, false)) return BitString{};
    return BitString::zeros(2 * k - q.size());
  });
}

std::uint64_t filr_adversary_m(const UnaryPolynomial& p, std::size_t k, std::uint64_t max_m) {
  BigNat pk = p(BigNat(k));
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    if (BigNat(m) <= pk) continue;
    BigNat v(m);
    for (std::size_t i = 0; i < k; ++i) v = p(v) + 1;
    if (v + k + 2 < (BigNat(1) << m)) return m;
  }
  throw EnumerationCapExceeded("filr_adversary: no m <= " + std::to_string(max_m) + " qualifies");
}

namespace {

Oracle filr_psi(std::vector<BitString> a, std::vector<BigNat> lens, std::size_t max_answer) {
  std::size_t i = a.size();
  if (i == 0) return Oracle("psi_0", [](const BitString&) { return BitString{}; });
  return Oracle("psi_" + std::to_string(i), [a, lens, max_answer](const BitString& q) {
    if (q.empty()) return a[0];
    bool ones = all_bits(q, true);
    for (std::size_t j = 2; j <= a.size(); ++j) {
      if (ones && BigNat(q.size()) == lens[j - 1]) return a[j - 1];
    }
    for (std::size_t j = 1; j <= a.size(); ++j) {
      if (q == a[j - 1]) return BitString::ones(checked_size(lens[j - 1], max_answer, "filr_adversary"));
    }
    return BitString{};
  });
}

BitString bits_of(std::uint64_t v, std::size_t m) {
  std::string s(m, '0');
  for (std::size_t i = 0; i < m && i < 64; ++i) {
    if ((v >> i) & 1U) s[m - 1 - i] = '1';
  }
  return BitString(s);
}

}  // namespace

FilrAdversary filr_adversary(const Machine& m, const UnaryPolynomial& p, std::size_t k,
                             std::size_t max_answer) {
  FilrAdversary out;
  out.m = filr_adversary_m(p, k);
  UnaryPolynomial p1 = p + UnaryPolynomial::constant(1);
  std::vector<BigNat> lens{BigNat(out.m)};  // lens[j-1] = (p+1)^{j-1}(m)
  for (std::size_t j = 1; j < k; ++j) lens.push_back(p1(lens.back()));
  BitString input = BitString::ones(k);
  out.psi.push_back(filr_psi({}, lens, max_answer));
  for (std::size_t j = 1; j <= k; ++j) {
    Trace t = run(m, out.psi.back(), input);
    std::set<BitString> excluded(out.a.begin(), out.a.end());
    excluded.insert(t.output);
    excluded.insert(BitString::ones(out.m));
    for (const auto& e : t.events) excluded.insert(e.query);
    std::uint64_t v = 0;
    BitString pick = bits_of(v, out.m);
    while (excluded.count(pick)) pick = bits_of(++v, out.m);
    out.a.push_back(pick);
    out.psi.push_back(filr_psi(out.a, lens, max_answer));
  }
  return out;
}

}  // namespace typetwo
