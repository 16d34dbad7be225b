#include <stdexcept>

#include "typetwo/operators.hpp"

namespace typetwo {

namespace {

// Constants fitted by tools/calibrate.cpp on seed 1 (including the
// eps-truncated replays of every trace) and rounded up.
constexpr unsigned kRStep = 4;
constexpr unsigned kSStep = 7;
constexpr unsigned kTStep = 3;
constexpr unsigned kPrefixMaxStep = 7;
constexpr unsigned kZeromaxStep = 9;
constexpr unsigned kFilrStep = 5;

using SOP = SecondOrderPolynomial;

SOP lit(unsigned c) { return SOP::constant(c); }
SOP n1() { return SOP::plus(SOP::n(), SOP::one()); }

// c * (n+1) * (n + 1 + l(arg))
SOP linear_times_answer(unsigned c, SOP arg) {
  return SOP::times(lit(c), SOP::times(n1(), SOP::plus(n1(), SOP::apply(std::move(arg)))));
}

MachineInfo toy(std::string name, std::string text, UnaryPolynomial p) {
  MachineInfo info;
  info.name = name;
  info.build = [text, name] { return parse_machine_text(text, name); };
  info.step_count = p;
  return info;
}

std::vector<MachineInfo> make_library() {
  std::vector<MachineInfo> lib;

  lib.push_back(toy("identity", "HALT r0\n", UnaryPolynomial::constant(1)));
  lib.back().reference = [](const Oracle&, const BitString& a) { return a; };
  lib.back().bound = lit(1);
  lib.push_back(toy("query", "QUERY r0 r1\nHALT r1\n", UnaryPolynomial::constant(2)));
  lib.back().reference = [](const Oracle& phi, const BitString& a) { return phi(a); };
  lib.back().bound = lit(2);
  lib.push_back(toy("query-copy", "QUERY r0 r1\nCOPY r1 r2\nHALT r2\n",
                    UnaryPolynomial({3, 1})));
  lib.back().reference = [](const Oracle& phi, const BitString& a) { return phi(a); };
  lib.back().bound = SOP::plus(lit(3), SOP::apply(SOP::n()));

  MachineInfo r;
  r.name = "R";
  r.build = build_R_machine;
  r.reference = R_ref;
  r.step_count = UnaryPolynomial::scaled_power(kRStep, 2);
  r.bound = SOP::times(lit(kRStep), SOP::times(n1(), n1()));
  r.lookahead_bound = 1;
  r.arity = 3;
  lib.push_back(r);

  MachineInfo s;
  s.name = "S";
  s.build = build_S_machine;
  s.reference = S_ref;
  s.step_count = UnaryPolynomial::scaled_power(kSStep, 1);
  s.bound = SOP::times(lit(kSStep), n1());
  s.arity = 3;
  lib.push_back(s);

  MachineInfo t;
  t.name = "T";
  t.build = build_T_machine;
  t.reference = T_ref;
  t.step_count = UnaryPolynomial::scaled_power(kTStep, 2);
  // Answers to queries <c', t> with |<c', t>| <= 3n + 2 are compared against b.
  t.bound = linear_times_answer(kTStep, SOP::plus(SOP::times(lit(3), SOP::n()), lit(3)));
  t.length_bound = 1;
  t.arity = 3;
  lib.push_back(t);

  MachineInfo it;
  it.name = "iteration";
  it.build = build_iteration_machine;
  it.reference = iteration_ref;
  it.step_count = UnaryPolynomial({5, 5});
  it.bound = SOP::plus(SOP::times(lit(5), SOP::n()), lit(5));
  lib.push_back(it);

  MachineInfo pm;
  pm.name = "prefix-max";
  pm.build = build_prefix_max_machine;
  pm.reference = prefix_max_ref;
  pm.step_count = UnaryPolynomial::scaled_power(kPrefixMaxStep, 2);
  pm.bound = linear_times_answer(kPrefixMaxStep, SOP::n());
  pm.lookahead_bound = 1;
  lib.push_back(pm);

  MachineInfo zm;
  zm.name = "zeromax";
  zm.build = build_zeromax_machine;
  zm.reference = zeromax_ref;
  zm.step_count = UnaryPolynomial::scaled_power(kZeromaxStep, 2);
  zm.bound = linear_times_answer(kZeromaxStep, SOP::n());
  zm.lookahead_bound = 1;
  lib.push_back(zm);

  MachineInfo f;
  f.name = "filr";
  f.build = build_filr_machine;
  f.reference = filr_ref;
  f.step_count = UnaryPolynomial::scaled_power(kFilrStep, 2);
  f.bound = linear_times_answer(kFilrStep, SOP::n());
  lib.push_back(f);

  MachineInfo sc;
  sc.name = "selfcomp";
  sc.build = build_selfcomp_machine;
  sc.reference = selfcomp_ref;
  sc.step_count = UnaryPolynomial::constant(3);
  sc.bound = lit(3);
  sc.lookahead_bound = 2;
  lib.push_back(sc);

  return lib;
}

}  // namespace

const std::vector<MachineInfo>& library() {
  static const std::vector<MachineInfo> lib = make_library();
  return lib;
}

bool is_library_machine(const std::string& name) {
  for (const auto& info : library()) {
    if (info.name == name) return true;
  }
  return false;
}

const MachineInfo& library_info(const std::string& name) {
  for (const auto& info : library()) {
    if (info.name == name) return info;
  }
  throw std::invalid_argument("unknown library machine: " + name);
}

}  // namespace typetwo
