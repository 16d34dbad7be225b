#include "typetwo/builder.hpp"
#include "typetwo/transforms.hpp"

namespace typetwo {

namespace {

void drop_last_n(ProgramBuilder& b, Reg r, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) b.drop_last(r);
}

// d := dbl(x), via <x, eps> = dbl(x) . 11.
void emit_double(ProgramBuilder& b, Reg x, Reg eps, Reg d) {
  b.pair(x, eps, d);
  drop_last_n(b, d, 2);
}

// d := 1^{|n| + 2p(|n|)} . tail, with tail one extra bit when plus_one is set.
void emit_query_bound(ProgramBuilder& b, const UnaryPolynomial& p, Reg n, Reg d, bool plus_one) {
  Reg pn = b.reg();
  emit_unary_poly(b, p, n, pn);
  b.lenu(n, d);
  b.append(pn, d);
  b.append(pn, d);
  if (plus_one) b.append_bit(true, d);
}

Machine build_mtilde(const Machine& m) {
  ProgramBuilder b;
  Reg eps = b.reg(), a = b.reg(), y = b.reg(), chk = b.reg(), c = b.reg(), e = b.reg(),
      e11 = b.reg(), cp = b.reg(), h = b.reg(), w = b.reg(), mm = b.reg(), qreg = b.reg(),
      u = b.reg(), t1 = b.reg(), msg = b.reg();
  std::string malformed = b.label("malformed"), ok1 = b.label("ok"), ok2 = b.label("ok"),
              ok3 = b.label("ok"), size_exc = b.label("size_exception"),
              rev_exc = b.label("revision_exception");

  b.proj1(0, a);
  b.proj2(0, y);
  b.pair(a, y, chk);
  b.jeq(chk, 0, ok1);
  b.jmp(malformed);
  b.bind(ok1);
  b.proj1(y, c);
  b.proj2(y, e);
  b.pair(c, e, chk);
  b.jeq(chk, y, ok2);
  b.jmp(malformed);
  b.bind(ok2);
  // e must be dbl(c') for a #-free c'.
  b.copy(e, e11);
  b.append_bit(true, e11);
  b.append_bit(true, e11);
  b.proj1(e11, cp);
  b.pair(cp, eps, chk);
  b.jeq(chk, e11, ok3);
  b.jmp(malformed);
  b.bind(ok3);
  b.query(c, h);
  emit_longer(b, 0, h, w);
  b.copy(a, mm);

  InlineHooks hooks;
  hooks.on_query = [&](ProgramBuilder& bb, Reg src, Reg dst) {
    std::string fits = bb.label("fits"), skip = bb.label("skip"), cont = bb.label("cont");
    bb.copy(src, qreg);
    bb.jle(cp, src, size_exc);
    bb.query(src, dst);
    bb.jle(dst, mm, skip);
    bb.copy(dst, mm);
    bb.bind(skip);
    bb.jle(dst, w, cont);
    bb.jmp(rev_exc);
    bb.bind(cont);
  };
  hooks.on_halt = [&](ProgramBuilder& bb, Reg out) {
    emit_double(bb, out, eps, msg);
    bb.halt(msg);
  };
  emit_inline(b, m, a, hooks);

  // enc(d ## 1^k) = <d, 11 . dbl(1^k)>
  b.bind(size_exc);
  b.lenu(mm, u);
  emit_double(b, u, eps, t1);
  b.konst(u, BitString("11"));
  b.append(t1, u);
  b.pair(qreg, u, msg);
  b.halt(msg);

  // enc(d # 1^{|c'|-|d|}) = <d, dbl(1^{|c'|-|d|})>
  std::string loop = b.label("pad"), padded = b.label("padded");
  b.bind(rev_exc);
  b.lenu(cp, u);
  b.copy(qreg, t1);
  b.bind(loop);
  b.jz(t1, padded);
  b.drop_last(u);
  b.drop_last(t1);
  b.jmp(loop);
  b.bind(padded);
  emit_double(b, u, eps, t1);
  b.pair(qreg, t1, msg);
  b.halt(msg);

  b.bind(malformed);
  b.halt(eps);
  return b.build(m.name() + "-tilde");
}

Machine build_n(const std::string& name, const UnaryPolynomial& p, std::size_t r) {
  ProgramBuilder b;
  Reg eps = b.reg(), wu = b.reg(), c = b.reg(), best = b.reg(), rc = b.reg(), cap = b.reg(),
      ones = b.reg(), dw = b.reg(), inner = b.reg(), q = b.reg(), ans = b.reg(), d = b.reg(),
      rest = b.reg(), chk = b.reg(), a11 = b.reg(), res = b.reg(), r11 = b.reg(), t = b.reg(),
      k = b.reg(), e1 = b.reg(), w2 = b.reg();
  std::string loop = b.label("loop"), norev = b.label("norev"), is_pair = b.label("pair"),
              ok_res = b.label("result"), single = b.label("single"), dbl = b.label("double"),
              ok_d = b.label("ok"), fail = b.label("fail");

  emit_query_bound(b, p, 0, wu, true);
  b.copy(0, best);
  b.konst(cap, BitString::ones(2 * r + 1));
  b.bind(loop);
  b.lenu(wu, ones);
  emit_double(b, ones, eps, dw);
  b.pair(c, dw, inner);
  b.pair(0, inner, q);
  b.query(q, ans);
  b.jle(ans, best, norev);
  b.copy(ans, best);
  b.append_bit(true, rc);
  b.jle(cap, rc, fail);
  b.bind(norev);
  b.proj1(ans, d);
  b.proj2(ans, rest);
  b.pair(d, rest, chk);
  b.jeq(chk, ans, is_pair);
  // No # at all: the answer is dbl(result).
  b.copy(ans, a11);
  b.append_bit(true, a11);
  b.append_bit(true, a11);
  b.proj1(a11, res);
  b.pair(res, eps, chk);
  b.jeq(chk, a11, ok_res);
  b.jmp(fail);
  b.bind(ok_res);
  b.halt(res);

  b.bind(is_pair);
  b.firstbit(rest, single, dbl);
  // Single #: rest must be dbl(1^{W-|d|}) and d a new prime.
  std::string pad = b.label("pad"), padded = b.label("padded"), ok_s = b.label("ok");
  b.bind(single);
  b.jeq(d, c, fail);
  b.lenu(wu, t);
  b.copy(d, k);
  b.bind(pad);
  b.jz(k, padded);
  b.jz(t, fail);
  b.drop_last(t);
  b.drop_last(k);
  b.jmp(pad);
  b.bind(padded);
  emit_double(b, t, eps, e1);
  b.jeq(e1, rest, ok_s);
  b.jmp(fail);
  b.bind(ok_s);
  b.copy(d, c);
  b.jmp(loop);

  b.bind(dbl);
  b.copy(rest, r11);
  b.append_bit(true, r11);
  b.append_bit(true, r11);
  b.proj2(r11, t);
  b.proj1(t, k);
  b.pair(k, eps, e1);
  b.pair(eps, e1, chk);
  b.jeq(chk, r11, ok_d);
  b.jmp(fail);
  b.bind(ok_d);
  emit_query_bound(b, p, k, w2, true);
  b.jle(w2, wu, fail);
  b.copy(w2, wu);
  b.konst(c);
  b.jmp(loop);

  b.bind(fail);
  b.halt(eps);
  return b.build(name + "-N");
}

}  // namespace

Factorization factorize(const Machine& m, const UnaryPolynomial& p, std::size_t r) {
  return {build_mtilde(m), build_n(m.name(), p, r)};
}

Machine budgeted_compose(const Machine& outer, const UnaryPolynomial& p, const Machine& inner,
                         const UnaryPolynomial& q) {
  ProgramBuilder ob;
  {
    Reg mt = ob.reg(), bu = ob.reg(), tagged = ob.reg();
    ob.copy(0, mt);
    emit_query_bound(ob, p, mt, bu, false);
    InlineHooks hooks;
    hooks.on_query = [&](ProgramBuilder& bb, Reg src, Reg dst) {
      std::string ok = bb.label("tag_ok"), skip = bb.label("skip");
      bb.jle(src, bu, ok);
      emit_query_bound(bb, p, mt, bu, false);
      bb.jle(src, bu, ok);
      bb.lenu(src, bu);
      bb.bind(ok);
      bb.pair(src, bu, tagged);
      bb.query(tagged, dst);
      bb.jle(dst, mt, skip);
      bb.copy(dst, mt);
      bb.bind(skip);
    };
    emit_inline(ob, outer, 0, hooks);
  }
  Machine outer_tagged = ob.build(outer.name() + "-tagged");

  ProgramBuilder ib;
  {
    Reg eps = ib.reg(), bval = ib.reg(), tag = ib.reg(), chk = ib.reg(), prime = ib.reg(),
        junk = ib.reg();
    std::string ok = ib.label("tag_ok");
    ib.proj1(0, bval);
    ib.proj2(0, tag);
    ib.pair(bval, tag, chk);
    ib.jeq(chk, 0, ok);
    ib.halt(eps);
    ib.bind(ok);
    emit_query_bound(ib, q, tag, prime, false);
    ib.query(prime, junk);
    emit_inline(ib, inner, bval, {});
  }
  Machine inner_primed = ib.build(inner.name() + "-primed");
  Machine out = inline_compose(outer_tagged, inner_primed);
  out.set_name(outer.name() + "o" + inner.name() + "-budgeted");
  return out;
}

}  // namespace typetwo
