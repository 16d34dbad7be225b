#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "typetwo/machine.hpp"
#include "typetwo/oracle.hpp"
#include "typetwo/sopoly.hpp"

namespace typetwo {

using BinaryRule = std::function<BitString(const BitString&, const BitString&)>;
using UnaryRule = std::function<BitString(const BitString&)>;

/// Rec(phi,a,b,eps) = a; Rec(phi,a,b,ci) = phi(ci, Rec(phi,a,b,c))^{<=|b|}.
BitString rec_ref(const BinaryRule& phi, const BitString& a, const BitString& b, const BitString& c);

/// Rec'(phi,a,psi,eps) = a; Rec'(phi,a,psi,ci) = t if |t| <= |psi(ci)| else psi(ci),
/// where t = phi(ci, Rec'(phi,a,psi,c)).
BitString rec_prime_ref(const BinaryRule& phi, const BitString& a, const UnaryRule& psi,
                        const BitString& c);

/// The single-port view of a binary rule: <x,y> -> phi(x,y), malformed -> phi(eps,eps).
Oracle tupled_oracle(const BinaryRule& phi, std::string name = "tupled");
/// phi(x,y) = psi(<x,y>).
BinaryRule untupled(const Oracle& psi);

// Pure references for the library machines. Tupled inputs follow the machine
// conventions documented in build_*.
BitString R_ref(const Oracle& psi, const BitString& input);          // input <a0,b,c>
BitString S_ref(const Oracle& phi, const BitString& input);          // input <t,b,d>
BitString T_ref(const Oracle& psi, const BitString& input);          // input <a,b,c>
BitString iteration_ref(const Oracle& phi, const BitString& a);      // phi^{|a|}("0")
BitString prefix_max_ref(const Oracle& phi, const BitString& a);     // 1^{max_{b<=a} |phi(b)|}
BitString filr_ref(const Oracle& phi, const BitString& a);           // F_{|a|}(phi)
BitString selfcomp_ref(const Oracle& phi, const BitString& a);       // phi(phi(a))
BitString zeromax_ref(const Oracle& phi, const BitString& a);        // 0^{max_{n<=|a|} |phi(0^n)|}

/// R(psi)(<a0,b,c>) = Rec(lambda x y. psi(<x,y>), a0, b, c). First action: the
/// priming query 1^{max(|<c,a0>|, |<c,b>|)}; every later query is no longer.
Machine build_R_machine();

/// S on <t,b,d> outputs phi(<d,t>)^{<=|b|}. T on <a,b,c> iterates its oracle
/// over the prefixes of c starting from a, returning eps once an answer is
/// longer than b.
Machine build_S_machine();
Machine build_T_machine();

/// Oracle for T realizing lambda d t. S(phi, <t,b,d>) for a fixed b.
Oracle S_oracle_for(const Oracle& phi, const BitString& b);
/// T(lambda d t. S(phi,t,b,d), a, b, c), run through the interpreter.
BitString run_ST_composition(const Oracle& phi, const BitString& input);

Machine build_iteration_machine();
Machine build_prefix_max_machine();
Machine build_filr_machine();
Machine build_selfcomp_machine();
Machine build_zeromax_machine();

/// Declared and fitted facts about a library machine. The step-count and bound
/// constants were fitted on a calibration corpus and are verified on separate
/// corpora by the tests.
struct MachineInfo {
  std::string name;
  std::function<Machine()> build;
  std::function<BitString(const Oracle&, const BitString&)> reference;
  UnaryPolynomial step_count;                     // plain step-count
  std::optional<SecondOrderPolynomial> bound;     // second-order time bound
  std::optional<std::size_t> lookahead_bound;     // claimed on every run
  std::optional<std::size_t> length_bound;        // claimed on every run
  std::size_t arity = 1;                          // number of tupled input components
};

const std::vector<MachineInfo>& library();
const MachineInfo& library_info(const std::string& name);
bool is_library_machine(const std::string& name);

}  // namespace typetwo
