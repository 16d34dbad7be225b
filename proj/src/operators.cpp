#include "typetwo/operators.hpp"

#include <algorithm>

#include "typetwo/builder.hpp"
#include "typetwo/interpreter.hpp"

namespace typetwo {

BitString rec_ref(const BinaryRule& phi, const BitString& a, const BitString& b, const BitString& c) {
  BitString t = a;
  for (std::size_t i = 1; i <= c.size(); ++i) t = truncate(phi(truncate(c, i), t), b.size());
  return t;
}

BitString rec_prime_ref(const BinaryRule& phi, const BitString& a, const UnaryRule& psi,
                        const BitString& c) {
  BitString t = a;
  for (std::size_t i = 1; i <= c.size(); ++i) {
    BitString ci = truncate(c, i);
    BitString next = phi(ci, t);
    BitString cap = psi(ci);
    t = next.size() <= cap.size() ? std::move(next) : std::move(cap);
  }
  return t;
}

Oracle tupled_oracle(const BinaryRule& phi, std::string name) {
  return Oracle(std::move(name), [phi](const BitString& q) {
    return phi(tuple_project(1, 2, q), tuple_project(2, 2, q));
  });
}

BinaryRule untupled(const Oracle& psi) {
  return [psi](const BitString& x, const BitString& y) { return psi(pair_encode(x, y)); };
}

BitString R_ref(const Oracle& psi, const BitString& input) {
  return rec_ref(untupled(psi), tuple_project(1, 3, input), tuple_project(2, 3, input),
                 tuple_project(3, 3, input));
}

BitString S_ref(const Oracle& phi, const BitString& input) {
  BitString t = tuple_project(1, 3, input), b = tuple_project(2, 3, input),
            d = tuple_project(3, 3, input);
  return truncate(phi(pair_encode(d, t)), b.size());
}

BitString T_ref(const Oracle& psi, const BitString& input) {
  BitString t = tuple_project(1, 3, input), b = tuple_project(2, 3, input),
            c = tuple_project(3, 3, input);
  for (std::size_t i = 1; i <= c.size(); ++i) {
    BitString s = psi(pair_encode(truncate(c, i), t));
    if (s.size() > b.size()) return {};
    t = std::move(s);
  }
  return t;
}

BitString iteration_ref(const Oracle& phi, const BitString& a) {
  BitString t("0");
  for (std::size_t i = 0; i < a.size(); ++i) t = phi(t);
  return t;
}

BitString prefix_max_ref(const Oracle& phi, const BitString& a) {
  std::size_t best = 0;
  for (std::size_t i = 0; i <= a.size(); ++i) best = std::max(best, phi(truncate(a, i)).size());
  return BitString::ones(best);
}

BitString filr_ref(const Oracle& phi, const BitString& a) {
  std::size_t cap = phi(BitString{}).size();
  BitString t;
  for (std::size_t i = 0; i < a.size(); ++i) t = truncate(phi(phi(t)), cap);
  return t;
}

BitString selfcomp_ref(const Oracle& phi, const BitString& a) { return phi(phi(a)); }

BitString zeromax_ref(const Oracle& phi, const BitString& a) {
  std::size_t best = 0;
  for (std::size_t n = 0; n <= a.size(); ++n) best = std::max(best, phi(BitString::zeros(n)).size());
  return BitString::zeros(best);
}

// ---------------------------------------------------------------- machines

namespace {

struct Triple {
  Reg x, y, z;
};

Triple unpack3(ProgramBuilder& b) {
  Triple t{b.reg(), b.reg(), b.reg()};
  emit_tuple_project(b, 1, 3, 0, t.x);
  emit_tuple_project(b, 2, 3, 0, t.y);
  emit_tuple_project(b, 3, 3, 0, t.z);
  return t;
}

// Iterates over the prefixes of c: for i = 1..|c|, pre := c^{<=i}, then
// q := <pre, t>, s := oracle(q), then `after(s)` decides what happens to s.
template <class After>
void emit_prefix_loop(ProgramBuilder& b, Reg c, Reg t, After after) {
  Reg ctr = b.reg(), pre = b.reg(), q = b.reg(), s = b.reg();
  std::string loop = b.label("loop"), done = b.label("done");
  b.bind(loop);
  b.jle(c, ctr, done);
  b.append_bit(true, ctr);
  b.copy(c, pre);
  b.trunc(ctr, pre);
  b.pair(pre, t, q);
  b.query(q, s);
  after(s);
  b.copy(s, t);
  b.jmp(loop);
  b.bind(done);
}

}  // namespace

Machine build_R_machine() {
  ProgramBuilder b;
  auto [a0, bound, c] = unpack3(b);
  Reg x = b.reg(), y = b.reg(), z = b.reg(), u = b.reg(), junk = b.reg(), t = b.reg();
  b.pair(c, a0, x);
  b.pair(c, bound, y);
  emit_longer(b, x, y, z);
  b.lenu(z, u);
  b.query(u, junk);
  b.copy(a0, t);
  emit_prefix_loop(b, c, t, [&](Reg s) { b.trunc(bound, s); });
  b.halt(t);
  return b.build("R");
}

Machine build_S_machine() {
  ProgramBuilder b;
  auto [t, bound, d] = unpack3(b);
  Reg q = b.reg(), s = b.reg();
  b.pair(d, t, q);
  b.query(q, s);
  b.trunc(bound, s);
  b.halt(s);
  return b.build("S");
}

Machine build_T_machine() {
  ProgramBuilder b;
  auto [a, bound, c] = unpack3(b);
  Reg t = b.reg(), eps = b.reg();
  b.copy(a, t);
  emit_prefix_loop(b, c, t, [&](Reg s) {
    std::string ok = b.label("fits");
    b.jle(s, bound, ok);
    b.halt(eps);
    b.bind(ok);
  });
  b.halt(t);
  return b.build("T");
}

Oracle S_oracle_for(const Oracle& phi, const BitString& b) {
  auto s = std::make_shared<Machine>(build_S_machine());
  return Oracle("S[" + phi.name() + "]", [s, phi, b](const BitString& q) {
    BitString d = tuple_project(1, 2, q), t = tuple_project(2, 2, q);
    return run(*s, phi, tuple_encode({t, b, d})).output;
  });
}

BitString run_ST_composition(const Oracle& phi, const BitString& input) {
  static const Machine T = build_T_machine();
  return run(T, S_oracle_for(phi, tuple_project(2, 3, input)), input).output;
}

Machine build_iteration_machine() {
  ProgramBuilder b;
  Reg t = b.reg(), ctr = b.reg();
  std::string loop = b.label("loop"), done = b.label("done");
  b.konst(t, BitString("0"));
  b.copy(0, ctr);
  b.bind(loop);
  b.jz(ctr, done);
  b.query(t, t);
  b.drop_last(ctr);
  b.jmp(loop);
  b.bind(done);
  b.halt(t);
  return b.build("iteration");
}

namespace {

// Queries q, q minus its last bit, ..., eps; best := 1^{max answer length}.
void emit_descending_max(ProgramBuilder& b, Reg q, Reg best) {
  Reg ans = b.reg(), u = b.reg();
  std::string loop = b.label("desc"), skip = b.label("desc_skip"), done = b.label("desc_done");
  b.bind(loop);
  b.query(q, ans);
  b.lenu(ans, u);
  b.jle(u, best, skip);
  b.copy(u, best);
  b.bind(skip);
  b.jz(q, done);
  b.drop_last(q);
  b.jmp(loop);
  b.bind(done);
}

}  // namespace

Machine build_prefix_max_machine() {
  ProgramBuilder b;
  Reg pre = b.reg(), best = b.reg();
  b.copy(0, pre);
  emit_descending_max(b, pre, best);
  b.halt(best);
  return b.build("prefix-max");
}

Machine build_zeromax_machine() {
  ProgramBuilder b;
  Reg z = b.reg(), ctr = b.reg(), best = b.reg(), out = b.reg();
  std::string build = b.label("zeros"), built = b.label("zeros_done");
  b.copy(0, ctr);
  b.bind(build);
  b.jz(ctr, built);
  b.append_bit(false, z);
  b.drop_last(ctr);
  b.jmp(build);
  b.bind(built);
  emit_descending_max(b, z, best);
  std::string conv = b.label("conv"), fin = b.label("conv_done");
  b.bind(conv);
  b.jz(best, fin);
  b.append_bit(false, out);
  b.drop_last(best);
  b.jmp(conv);
  b.bind(fin);
  b.halt(out);
  return b.build("zeromax");
}

Machine build_filr_machine() {
  ProgramBuilder b;
  Reg eps = b.reg(), e = b.reg(), t = b.reg(), ctr = b.reg(), x = b.reg(), y = b.reg();
  std::string loop = b.label("loop"), done = b.label("done");
  b.query(eps, e);
  b.copy(0, ctr);
  b.bind(loop);
  b.jz(ctr, done);
  b.query(t, x);
  b.query(x, y);
  b.trunc(e, y);
  b.copy(y, t);
  b.drop_last(ctr);
  b.jmp(loop);
  b.bind(done);
  b.halt(t);
  return b.build("filr");
}

Machine build_selfcomp_machine() {
  ProgramBuilder b;
  Reg x = b.reg(), y = b.reg();
  b.query(0, x);
  b.query(x, y);
  b.halt(y);
  return b.build("selfcomp");
}

}  // namespace typetwo
