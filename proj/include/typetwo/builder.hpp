#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "typetwo/machine.hpp"
#include "typetwo/sopoly.hpp"

namespace typetwo {

/// Incremental construction of IR programs with fresh registers and labels.
/// Register 0 is the input; fresh registers start at 1.
class ProgramBuilder {
 public:
  ProgramBuilder() = default;

  Reg reg() { return next_reg_++; }
  std::string label(std::string_view hint);
  void bind(const std::string& label);
  std::size_t size() const noexcept { return code_.size(); }

  void emit(Instruction ins);
  void konst(Reg d, const BitString& lit = {});
  void copy(Reg s, Reg d);
  void append(Reg s, Reg d);
  void append_bit(bool bit, Reg d);
  void drop_last(Reg d);
  void trunc(Reg s, Reg d);
  void lenu(Reg s, Reg d);
  void pair(Reg x, Reg y, Reg d);
  void proj1(Reg s, Reg d);
  void proj2(Reg s, Reg d);
  void query(Reg s, Reg d);
  void jmp(const std::string& l);
  void jz(Reg r, const std::string& l);
  void jle(Reg x, Reg y, const std::string& l);
  void jeq(Reg x, Reg y, const std::string& l);
  void jprefix(Reg x, Reg y, const std::string& l);
  void firstbit(Reg r, const std::string& l0, const std::string& l1);
  void halt(Reg r);

  Machine build(std::string name) const;

 private:
  std::vector<Instruction> code_;
  std::map<std::string, std::size_t> labels_;
  Reg next_reg_ = 1;
  std::size_t label_counter_ = 0;
};

/// d := pi_{i,k}(s) by a chain of PROJ instructions.
void emit_tuple_project(ProgramBuilder& b, std::size_t i, std::size_t k, Reg s, Reg d);

/// d := 1^{|x| * |y|}. d must differ from x and y.
void emit_unary_mul(ProgramBuilder& b, Reg x, Reg y, Reg d);

/// d := 1^{p(|n|)}. d must differ from n; coefficients must fit in 32 bits.
void emit_unary_poly(ProgramBuilder& b, const UnaryPolynomial& p, Reg n, Reg d);

/// d := the longer of x and y (x on ties), copied.
void emit_longer(ProgramBuilder& b, Reg x, Reg y, Reg d);

/// Hooks for splicing a machine into a larger program.
struct InlineHooks {
  /// Replaces each QUERY src dst (registers already mapped). Default: QUERY.
  std::function<void(ProgramBuilder&, Reg src, Reg dst)> on_query;
  /// Replaces each HALT r. Must transfer control (JMP or HALT).
  std::function<void(ProgramBuilder&, Reg out)> on_halt;
  /// Emitted in front of every instruction, jump targets included.
  std::function<void(ProgramBuilder&, const Instruction& mapped)> before;
};

/// Emits a copy of m with fresh registers and labels. On entry every copied
/// register is reset to ε and the copy's r0 receives `input`. Returns the
/// register map (index = register of m).
std::vector<Reg> emit_inline(ProgramBuilder& b, const Machine& m, Reg input, const InlineHooks& hooks);

/// Adds the cost of `mapped` (under the interpreter's cost model) to the
/// length of `spent` and jumps to `over` once |spent| > |budget|.
void emit_charge(ProgramBuilder& b, const Instruction& mapped, Reg spent, Reg budget,
                 const std::string& over);

}  // namespace typetwo
