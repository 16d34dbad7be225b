#include "typetwo/builder.hpp"

namespace typetwo {

std::string ProgramBuilder::label(std::string_view hint) {
  return std::string(hint) + "_" + std::to_string(label_counter_++);
}

void ProgramBuilder::bind(const std::string& label) {
  if (!labels_.emplace(label, code_.size()).second) {
    throw ValidationError("label bound twice: " + label);
  }
}

void ProgramBuilder::emit(Instruction ins) { code_.push_back(std::move(ins)); }

namespace {

Instruction make(Op op, Reg a = 0, Reg b = 0, Reg c = 0) {
  Instruction ins;
  ins.op = op;
  ins.a = a;
  ins.b = b;
  ins.c = c;
  return ins;
}

Instruction jump(Op op, Reg a, Reg b, const std::string& l) {
  Instruction ins = make(op, a, b);
  ins.target = l;
  return ins;
}

}  // namespace

void ProgramBuilder::konst(Reg d, const BitString& lit) {
  Instruction ins = make(Op::Const, d);
  ins.literal = lit;
  emit(std::move(ins));
}
void ProgramBuilder::copy(Reg s, Reg d) { emit(make(Op::Copy, s, d)); }
void ProgramBuilder::append(Reg s, Reg d) { emit(make(Op::Append, s, d)); }
void ProgramBuilder::append_bit(bool bit, Reg d) {
  Instruction ins = make(Op::AppendBit, d);
  ins.bit = bit;
  emit(std::move(ins));
}
void ProgramBuilder::drop_last(Reg d) { emit(make(Op::DropLast, d)); }
void ProgramBuilder::trunc(Reg s, Reg d) { emit(make(Op::Trunc, s, d)); }
void ProgramBuilder::lenu(Reg s, Reg d) { emit(make(Op::LenU, s, d)); }
void ProgramBuilder::pair(Reg x, Reg y, Reg d) { emit(make(Op::Pair, x, y, d)); }
void ProgramBuilder::proj1(Reg s, Reg d) { emit(make(Op::Proj1, s, d)); }
void ProgramBuilder::proj2(Reg s, Reg d) { emit(make(Op::Proj2, s, d)); }
void ProgramBuilder::query(Reg s, Reg d) { emit(make(Op::Query, s, d)); }
void ProgramBuilder::jmp(const std::string& l) { emit(jump(Op::Jmp, 0, 0, l)); }
void ProgramBuilder::jz(Reg r, const std::string& l) { emit(jump(Op::Jz, r, 0, l)); }
void ProgramBuilder::jle(Reg x, Reg y, const std::string& l) { emit(jump(Op::Jle, x, y, l)); }
void ProgramBuilder::jeq(Reg x, Reg y, const std::string& l) { emit(jump(Op::Jeq, x, y, l)); }
void ProgramBuilder::jprefix(Reg x, Reg y, const std::string& l) { emit(jump(Op::Jprefix, x, y, l)); }
void ProgramBuilder::firstbit(Reg r, const std::string& l0, const std::string& l1) {
  Instruction ins = jump(Op::FirstBit, r, 0, l0);
  ins.target2 = l1;
  emit(std::move(ins));
}
void ProgramBuilder::halt(Reg r) { emit(make(Op::Halt, r)); }

Machine ProgramBuilder::build(std::string name) const { return Machine(std::move(name), code_, labels_); }

void emit_tuple_project(ProgramBuilder& b, std::size_t i, std::size_t k, Reg s, Reg d) {
  if (i < 1 || i > k) throw std::invalid_argument("emit_tuple_project: need 1 <= i <= k");
  if (k == 1) {
    b.copy(s, d);
    return;
  }
  Reg cur = s;
  for (std::size_t j = 1; j < i; ++j) {
    b.proj2(cur, d);
    cur = d;
  }
  if (i < k) {
    b.proj1(cur, d);
  } else if (cur != d) {
    b.copy(cur, d);
  }
}

void emit_unary_mul(ProgramBuilder& b, Reg x, Reg y, Reg d) {
  Reg ctr = b.reg();
  std::string loop = b.label("mul"), done = b.label("mul_done");
  b.konst(d);
  b.copy(x, ctr);
  b.bind(loop);
  b.jz(ctr, done);
  b.append(y, d);
  b.drop_last(ctr);
  b.jmp(loop);
  b.bind(done);
}

void emit_unary_poly(ProgramBuilder& b, const UnaryPolynomial& p, Reg n, Reg d) {
  auto coeff = [&](std::size_t i) {
    const BigNat& c = p.coeffs()[i];
    if (c > 0xFFFFFFFFu) throw std::invalid_argument("emit_unary_poly: coefficient too large");
    return BitString::ones(static_cast<std::size_t>(c));
  };
  if (p.is_zero()) {
    b.konst(d);
    return;
  }
  Reg acc = b.reg(), tmp = b.reg(), k = b.reg();
  b.konst(acc, coeff(p.degree()));
  for (std::size_t i = p.degree(); i-- > 0;) {
    emit_unary_mul(b, acc, n, tmp);
    b.konst(k, coeff(i));
    b.append(k, tmp);
    b.copy(tmp, acc);
  }
  b.copy(acc, d);
}

void emit_longer(ProgramBuilder& b, Reg x, Reg y, Reg d) {
  std::string take_x = b.label("longer_x"), done = b.label("longer_done");
  b.jle(y, x, take_x);
  b.copy(y, d);
  b.jmp(done);
  b.bind(take_x);
  b.copy(x, d);
  b.bind(done);
}

std::vector<Reg> emit_inline(ProgramBuilder& b, const Machine& m, Reg input, const InlineHooks& hooks) {
  std::vector<Reg> map(m.register_count());
  for (auto& r : map) r = b.reg();
  std::string prefix = b.label("inl") + ".";
  for (std::size_t i = 1; i < map.size(); ++i) b.konst(map[i]);
  b.copy(input, map[0]);

  std::vector<std::vector<std::string>> at(m.code().size());
  for (const auto& [label, idx] : m.labels()) at[idx].push_back(label);
  for (std::size_t pc = 0; pc < m.code().size(); ++pc) {
    for (const auto& l : at[pc]) b.bind(prefix + l);
    Instruction ins = m.code()[pc];
    ins.a = map[ins.a];
    if (ins.op == Op::Jmp) ins.a = map[0];
    ins.b = (ins.op == Op::Pair || ins.op == Op::Jle || ins.op == Op::Jeq || ins.op == Op::Jprefix ||
             ins.op == Op::Copy || ins.op == Op::Append || ins.op == Op::Trunc || ins.op == Op::LenU ||
             ins.op == Op::Proj1 || ins.op == Op::Proj2 || ins.op == Op::Query)
                ? map[ins.b]
                : map[0];
    ins.c = ins.op == Op::Pair ? map[ins.c] : map[0];
    if (!ins.target.empty()) ins.target = prefix + ins.target;
    if (!ins.target2.empty()) ins.target2 = prefix + ins.target2;
    if (hooks.before) hooks.before(b, ins);
    if (ins.op == Op::Query && hooks.on_query) {
      hooks.on_query(b, ins.a, ins.b);
    } else if (ins.op == Op::Halt && hooks.on_halt) {
      hooks.on_halt(b, ins.a);
    } else {
      b.emit(std::move(ins));
    }
  }
  return map;
}

void emit_charge(ProgramBuilder& b, const Instruction& ins, Reg spent, Reg budget, const std::string& over) {
  auto larger_or_smaller = [&](bool larger) {
    std::string pick_b = b.label("chg"), done = b.label("chg_done");
    // JLE a b: |a| <= |b|, so b is the larger and a the smaller.
    b.jle(ins.a, ins.b, pick_b);
    b.append(larger ? ins.a : ins.b, spent);
    b.jmp(done);
    b.bind(pick_b);
    b.append(larger ? ins.b : ins.a, spent);
    b.bind(done);
  };
  switch (ins.op) {
    case Op::Const: {
      Reg tmp = b.reg();
      b.konst(tmp, ins.literal);
      b.append(tmp, spent);
      break;
    }
    case Op::Copy:
    case Op::Append:
    case Op::LenU:
    case Op::Proj1:
    case Op::Proj2: b.append(ins.a, spent); break;
    case Op::Trunc: larger_or_smaller(false); break;
    case Op::Pair:
      b.append(ins.a, spent);
      b.append(ins.b, spent);
      break;
    case Op::Jle:
    case Op::Jeq:
    case Op::Jprefix: larger_or_smaller(true); break;
    default: break;
  }
  b.append_bit(true, spent);
  std::string ok = b.label("chg_ok");
  b.jle(spent, budget, ok);
  b.jmp(over);
  b.bind(ok);
}

}  // namespace typetwo
