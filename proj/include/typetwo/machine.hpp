#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "typetwo/strings.hpp"

namespace typetwo {

enum class Op : std::uint8_t {
  Const,      // CONST rd [bits]          rd := bits
  Copy,       // COPY rs rd               rd := rs
  Append,     // APPEND rs rd             rd := rd . rs
  AppendBit,  // APPENDBIT b rd           rd := rd . b
  DropLast,   // DROPLAST rd              rd := rd without its last bit
  Trunc,      // TRUNC rs rd              rd := rd^{<=|rs|}
  LenU,       // LENU rs rd               rd := 1^{|rs|}
  Pair,       // PAIR rx ry rd            rd := <rx, ry>
  Proj1,      // PROJ1 rs rd              rd := pi_{1,2}(rs)
  Proj2,      // PROJ2 rs rd              rd := pi_{2,2}(rs)
  Query,      // QUERY rs rd              rd := phi(rs)
  Jmp,        // JMP L
  Jz,         // JZ r L                   jump if r is empty
  Jle,        // JLE rx ry L              jump if |rx| <= |ry|
  Jeq,        // JEQ rx ry L              jump if rx == ry
  Jprefix,    // JPREFIX rx ry L          jump if rx is a prefix of ry
  FirstBit,   // FIRSTBIT r L0 L1         branch on the first bit; empty falls through
  Halt,       // HALT r
};

std::string_view op_name(Op op);

using Reg = std::uint32_t;

struct Instruction {
  Op op = Op::Halt;
  Reg a = 0;
  Reg b = 0;
  Reg c = 0;
  bool bit = false;       // APPENDBIT
  BitString literal;      // CONST
  std::string target;     // jump label (FIRSTBIT: the 0-branch)
  std::string target2;    // FIRSTBIT: the 1-branch

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Raised on structurally invalid programs: undefined labels, bad registers,
/// unknown opcodes. Carries a 1-based line number when parsed from text.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A program in the oracle-machine IR. Input arrives in r0; the output is the
/// register named by the HALT that ends the run. Labels name instruction
/// indices; several labels may name the same index.
class Machine {
 public:
  Machine() = default;
  Machine(std::string name, std::vector<Instruction> code, std::map<std::string, std::size_t> labels);

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Instruction>& code() const noexcept { return code_; }
  const std::map<std::string, std::size_t>& labels() const noexcept { return labels_; }
  std::size_t register_count() const noexcept { return register_count_; }

  /// Resolved jump targets, parallel to code().
  std::size_t target_index(std::size_t pc) const { return resolved_[pc].first; }
  std::size_t target2_index(std::size_t pc) const { return resolved_[pc].second; }

  friend bool operator==(const Machine& x, const Machine& y) {
    return x.code_ == y.code_ && x.labels_ == y.labels_;
  }

 private:
  void validate();

  std::string name_;
  std::vector<Instruction> code_;
  std::map<std::string, std::size_t> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> resolved_;
  std::size_t register_count_ = 1;
};

/// Parses the line-oriented machine text format (`label:` lines, `;` comments).
Machine parse_machine_text(std::string_view source, std::string name = "");

/// Inverse of parse_machine_text up to comments and whitespace.
std::string print_machine_text(const Machine& m);

/// Cost of one instruction given the current register contents.
std::uint64_t instruction_cost(const Instruction& ins, const std::vector<BitString>& regs);

}  // namespace typetwo
