#include "typetwo/machine.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace typetwo {

namespace {

struct OpInfo {
  Op op;
  std::string_view name;
};

constexpr std::array<OpInfo, 18> kOps{{
    {Op::Const, "CONST"},     {Op::Copy, "COPY"},       {Op::Append, "APPEND"},
    {Op::AppendBit, "APPENDBIT"}, {Op::DropLast, "DROPLAST"}, {Op::Trunc, "TRUNC"},
    {Op::LenU, "LENU"},       {Op::Pair, "PAIR"},       {Op::Proj1, "PROJ1"},
    {Op::Proj2, "PROJ2"},     {Op::Query, "QUERY"},     {Op::Jmp, "JMP"},
    {Op::Jz, "JZ"},           {Op::Jle, "JLE"},         {Op::Jeq, "JEQ"},
    {Op::Jprefix, "JPREFIX"}, {Op::FirstBit, "FIRSTBIT"}, {Op::Halt, "HALT"},
}};

std::optional<Op> op_from_name(std::string_view name) {
  for (const auto& info : kOps) {
    if (info.name == name) return info.op;
  }
  return std::nullopt;
}

std::size_t max_reg(const Instruction& ins) {
  switch (ins.op) {
    case Op::Jmp: return 0;
    case Op::Const:
    case Op::AppendBit:
    case Op::DropLast:
    case Op::Jz:
    case Op::FirstBit:
    case Op::Halt: return ins.a;
    case Op::Pair: return std::max({ins.a, ins.b, ins.c});
    default: return std::max(ins.a, ins.b);
  }
}

bool has_target(Op op) {
  return op == Op::Jmp || op == Op::Jz || op == Op::Jle || op == Op::Jeq || op == Op::Jprefix ||
         op == Op::FirstBit;
}

}  // namespace

std::string_view op_name(Op op) {
  for (const auto& info : kOps) {
    if (info.op == op) return info.name;
  }
  return "?";
}

Machine::Machine(std::string name, std::vector<Instruction> code,
                 std::map<std::string, std::size_t> labels)
    : name_(std::move(name)), code_(std::move(code)), labels_(std::move(labels)) {
  validate();
}

void Machine::validate() {
  if (code_.empty()) throw ValidationError("empty program");
  for (const auto& [label, idx] : labels_) {
    if (idx >= code_.size()) throw ValidationError("label '" + label + "' points past the program end");
  }
  Op last = code_.back().op;
  if (last != Op::Halt && last != Op::Jmp) {
    throw ValidationError("program can fall off its end (last instruction must be HALT or JMP)");
  }
  resolved_.assign(code_.size(), {0, 0});
  std::size_t regs = 1;
  auto resolve = [&](const std::string& label, std::size_t pc) {
    auto it = labels_.find(label);
    if (it == labels_.end()) {
      throw ValidationError("undefined label '" + label + "' at instruction " + std::to_string(pc));
    }
    return it->second;
  };
  for (std::size_t pc = 0; pc < code_.size(); ++pc) {
    const auto& ins = code_[pc];
    regs = std::max(regs, max_reg(ins) + 1);
    if (has_target(ins.op)) resolved_[pc].first = resolve(ins.target, pc);
    if (ins.op == Op::FirstBit) resolved_[pc].second = resolve(ins.target2, pc);
  }
  register_count_ = regs;
}

std::uint64_t instruction_cost(const Instruction& ins, const std::vector<BitString>& r) {
  switch (ins.op) {
    case Op::Const: return ins.literal.size() + 1;
    case Op::Copy:
    case Op::Append:
    case Op::LenU:
    case Op::Proj1:
    case Op::Proj2: return r[ins.a].size() + 1;
    case Op::Trunc: return std::min(r[ins.a].size(), r[ins.b].size()) + 1;
    case Op::Pair: return r[ins.a].size() + r[ins.b].size() + 1;
    case Op::Jle:
    case Op::Jeq:
    case Op::Jprefix: return std::max(r[ins.a].size(), r[ins.b].size()) + 1;
    case Op::AppendBit:
    case Op::DropLast:
    case Op::Query:
    case Op::Jmp:
    case Op::Jz:
    case Op::FirstBit:
    case Op::Halt: return 1;
  }
  return 1;
}

// ---------------------------------------------------------------- text

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '@' ||
         c == '$' || c == '-';
}

bool is_label(std::string_view s) {
  return !s.empty() && !std::isdigit(static_cast<unsigned char>(s[0])) &&
         std::all_of(s.begin(), s.end(), is_label_char);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Reg parse_reg(const std::string& tok, std::size_t line) {
  if (tok.size() < 2 || tok[0] != 'r' ||
      !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ValidationError("bad register '" + tok + "'", line);
  }
  if (tok.size() > 7) throw ValidationError("register index too large '" + tok + "'", line);
  return static_cast<Reg>(std::stoul(tok.substr(1)));
}

std::string parse_label_ref(const std::string& tok, std::size_t line) {
  if (!is_label(tok)) throw ValidationError("bad label '" + tok + "'", line);
  return tok;
}

Instruction parse_instruction(const std::vector<std::string>& t, std::size_t line) {
  auto op = op_from_name(t[0]);
  if (!op) throw ValidationError("unknown opcode '" + t[0] + "'", line);
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (t.size() - 1 < lo || t.size() - 1 > hi) {
      throw ValidationError(std::string(op_name(*op)) + " expects " + std::to_string(lo) +
                                (lo == hi ? "" : "-" + std::to_string(hi)) + " operands",
                            line);
    }
  };
  Instruction ins;
  ins.op = *op;
  switch (*op) {
    case Op::Const:
      need(1, 2);
      ins.a = parse_reg(t[1], line);
      if (t.size() == 3) {
        try {
          ins.literal = BitString(t[2]);
        } catch (const MalformedEncoding&) {
          throw ValidationError("bad bit-string literal '" + t[2] + "'", line);
        }
      }
      break;
    case Op::AppendBit:
      need(2, 2);
      if (t[1] != "0" && t[1] != "1") throw ValidationError("APPENDBIT expects 0 or 1", line);
      ins.bit = t[1] == "1";
      ins.a = parse_reg(t[2], line);
      break;
    case Op::DropLast:
    case Op::Halt:
      need(1, 1);
      ins.a = parse_reg(t[1], line);
      break;
    case Op::Copy:
    case Op::Append:
    case Op::Trunc:
    case Op::LenU:
    case Op::Proj1:
    case Op::Proj2:
    case Op::Query:
      need(2, 2);
      ins.a = parse_reg(t[1], line);
      ins.b = parse_reg(t[2], line);
      break;
    case Op::Pair:
      need(3, 3);
      ins.a = parse_reg(t[1], line);
      ins.b = parse_reg(t[2], line);
      ins.c = parse_reg(t[3], line);
      break;
    case Op::Jmp:
      need(1, 1);
      ins.target = parse_label_ref(t[1], line);
      break;
    case Op::Jz:
      need(2, 2);
      ins.a = parse_reg(t[1], line);
      ins.target = parse_label_ref(t[2], line);
      break;
    case Op::Jle:
    case Op::Jeq:
    case Op::Jprefix:
      need(3, 3);
      ins.a = parse_reg(t[1], line);
      ins.b = parse_reg(t[2], line);
      ins.target = parse_label_ref(t[3], line);
      break;
    case Op::FirstBit:
      need(3, 3);
      ins.a = parse_reg(t[1], line);
      ins.target = parse_label_ref(t[2], line);
      ins.target2 = parse_label_ref(t[3], line);
      break;
  }
  return ins;
}

}  // namespace

Machine parse_machine_text(std::string_view source, std::string name) {
  std::vector<Instruction> code;
  std::vector<std::size_t> lines;
  std::map<std::string, std::size_t> labels;
  std::map<std::string, std::size_t> label_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (name.empty() && line.rfind("; machine ", 0) == 0) {
      auto toks = split_ws(line.substr(10));
      if (toks.size() == 1) name = toks[0];
    }
    if (auto semi = line.find(';'); semi != std::string_view::npos) line = line.substr(0, semi);
    auto toks = split_ws(line);
    while (!toks.empty() && toks[0].size() > 1 && toks[0].back() == ':') {
      std::string label = toks[0].substr(0, toks[0].size() - 1);
      if (!is_label(label)) throw ValidationError("bad label '" + label + "'", line_no);
      if (labels.count(label)) throw ValidationError("duplicate label '" + label + "'", line_no);
      labels[label] = code.size();
      label_lines[label] = line_no;
      toks.erase(toks.begin());
    }
    if (!toks.empty()) {
      code.push_back(parse_instruction(toks, line_no));
      lines.push_back(line_no);
    }
    if (end == source.size()) break;
  }
  // Report undefined labels against the line that uses them.
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (const auto* ref : {&code[i].target, &code[i].target2}) {
      if (!ref->empty() && !labels.count(*ref)) {
        throw ValidationError("undefined label '" + *ref + "'", lines[i]);
      }
    }
  }
  for (const auto& [label, idx] : labels) {
    if (idx >= code.size()) {
      throw ValidationError("label '" + label + "' is not followed by an instruction", label_lines[label]);
    }
  }
  try {
    return Machine(std::move(name), std::move(code), std::move(labels));
  } catch (const ValidationError& e) {
    throw ValidationError(e.what(), line_no);
  }
}

std::string print_machine_text(const Machine& m) {
  std::vector<std::vector<std::string>> at(m.code().size());
  for (const auto& [label, idx] : m.labels()) at[idx].push_back(label);
  std::ostringstream os;
  if (!m.name().empty()) os << "; machine " << m.name() << "\n";
  for (std::size_t pc = 0; pc < m.code().size(); ++pc) {
    for (const auto& label : at[pc]) os << label << ":\n";
    const auto& ins = m.code()[pc];
    os << "  " << op_name(ins.op);
    auto r = [](Reg x) { return " r" + std::to_string(x); };
    switch (ins.op) {
      case Op::Const:
        os << r(ins.a);
        if (!ins.literal.empty()) os << " " << ins.literal.str();
        break;
      case Op::AppendBit: os << " " << (ins.bit ? '1' : '0') << r(ins.a); break;
      case Op::DropLast:
      case Op::Halt: os << r(ins.a); break;
      case Op::Pair: os << r(ins.a) << r(ins.b) << r(ins.c); break;
      case Op::Jmp: os << " " << ins.target; break;
      case Op::Jz: os << r(ins.a) << " " << ins.target; break;
      case Op::Jle:
      case Op::Jeq:
      case Op::Jprefix: os << r(ins.a) << r(ins.b) << " " << ins.target; break;
      case Op::FirstBit: os << r(ins.a) << " " << ins.target << " " << ins.target2; break;
      default: os << r(ins.a) << r(ins.b); break;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace typetwo
