#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "typetwo/interpreter.hpp"
#include "typetwo/machine.hpp"
#include "typetwo/oracle.hpp"
#include "typetwo/sopoly.hpp"

namespace typetwo {

/// Label of the HALT that wrappers jump to when a declared step-count or
/// revision bound turns out to be wrong.
inline constexpr const char* kBudgetViolationLabel = "budget_violation";

/// The output of that HALT. Ordinary runs can produce the same string; use
/// is_budget_violation to tell them apart.
BitString budget_violation_output();

/// True when t ended at m's budget-violation HALT.
bool is_budget_violation(const Machine& m, const Trace& t);

/// Phase simulation of M (plain step-count p, at most r length revisions).
/// Each phase poses one priming query of size w + 2p(w), w the largest length
/// seen so far, then replays M under a budget of p(w) steps, restarting on a
/// length revision. More than r + 1 phases, or an exhausted budget, ends at
/// the budget-violation HALT.
Machine spt_to_mpt(const Machine& m, const UnaryPolynomial& p, std::size_t r);

struct Factorization {
  Machine mtilde;
  Machine n;
};

/// M = N o Mtilde, both factors with finite length revision.
///
/// Mtilde on <a, enc(c # c')> primes with the query c and simulates M on a.
/// Before a query d with |d| >= |c'| it returns enc(d ## 1^k), k the largest
/// of |a| and the answers so far. On an answer longer than everything Mtilde
/// has seen it returns enc(d # 1^{|c'| - |d|}). When M halts with r it returns
/// enc(r). Anything not of the form <a, enc(c # c')> yields eps.
///
/// N on a starts with W = |a| + 2p(|a|) + 1 and c = eps and queries
/// <a, enc(c # 1^W)>. On a single-# message it sets c := d; on a ##-message
/// with k it moves to W' = k + 2p(k) + 1 (eps unless W' > W) and resets c.
/// The (2r+1)-st length revision of N, a malformed answer, or a single-#
/// message with the wrong padding or d = c, yields eps.
Factorization factorize(const Machine& m, const UnaryPolynomial& p, std::size_t r);

/// Oracle answering x with the output of `inner` run on phi and x.
Oracle machine_oracle(const Machine& inner, const Oracle& phi, std::uint64_t fuel = kDefaultFuel);

/// Each QUERY of outer becomes a fresh copy of inner reading the query
/// register and talking to the real oracle.
Machine inline_compose(const Machine& outer, const Machine& inner);

/// outer' tags each query b as <b, 1^B> with B = w + 2p(w) for the largest
/// length w seen (recomputed when a query outgrows it); inner' unpacks the
/// tag, primes with 1^{u + 2q(u)} for u = |tag| and simulates inner on b.
/// The result is inline_compose(outer', inner').
Machine budgeted_compose(const Machine& outer, const UnaryPolynomial& p, const Machine& inner,
                         const UnaryPolynomial& q);

/// phi(0) = 0^{t(n)+1}; phi(0^{t^k(n)+1}) = 0^{t^{k+1}(n)+1} for k >= 1; eps otherwise.
/// t must be strictly increasing.
Oracle iteration_adversary(const SizeFunction& t, std::uint64_t n);

struct FilrAdversary {
  std::vector<Oracle> psi;        // psi_0 .. psi_k
  std::vector<BitString> a;       // a_1 .. a_k
  std::uint64_t m = 0;
};

/// Smallest m > p(k) with (p+1)^k(m) < 2^m - k - 2. Throws EnumerationCapExceeded
/// when no m <= max_m qualifies.
std::uint64_t filr_adversary_m(const UnaryPolynomial& p, std::size_t k, std::uint64_t max_m = 4096);

/// The oracle family psi_0..psi_k forcing revisions on machines computing the
/// filr operator. Each a_j is the lexicographically smallest length-m string
/// containing a 0 that avoids 1^m, the earlier a's, and the queries and output
/// of M run on psi_{j-1} and 1^k. Answers longer than max_answer bits are
/// refused with EnumerationCapExceeded when queried.
FilrAdversary filr_adversary(const Machine& m, const UnaryPolynomial& p, std::size_t k,
                             std::size_t max_answer = std::size_t{1} << 24);

/// phi(0^n) = 0^{2k-n} for n <= k; eps otherwise.
Oracle selfcomp_adversary(std::size_t k);

}  // namespace typetwo
