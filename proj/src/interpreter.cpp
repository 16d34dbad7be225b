#include "typetwo/interpreter.hpp"

#include <algorithm>
#include <memory>

namespace typetwo {

Trace run(const Machine& m, const Oracle& oracle, const BitString& input, std::uint64_t fuel) {
  if (fuel == 0) throw std::invalid_argument("run: fuel must be at least 1");
  std::vector<BitString> r(m.register_count());
  r[0] = input;
  Trace t;
  t.input = input;
  const auto& code = m.code();
  std::size_t pc = 0;
  for (;;) {
    const Instruction& ins = code[pc];
    std::uint64_t cost = instruction_cost(ins, r);
    if (t.steps + cost > fuel) throw FuelExhausted(std::move(t));
    t.steps += cost;
    std::size_t next = pc + 1;
    switch (ins.op) {
      case Op::Const: r[ins.a] = ins.literal; break;
      case Op::Copy: r[ins.b] = r[ins.a]; break;
      case Op::Append:
        if (ins.a == ins.b) {
          r[ins.b] = r[ins.b] + r[ins.b];
        } else {
          r[ins.b].append(r[ins.a]);
        }
        break;
      case Op::AppendBit: r[ins.a].push_back(ins.bit); break;
      case Op::DropLast:
        if (!r[ins.a].empty()) r[ins.a].pop_back();
        break;
      case Op::Trunc: r[ins.b] = truncate(r[ins.b], r[ins.a].size()); break;
      case Op::LenU: r[ins.b] = BitString::ones(r[ins.a].size()); break;
      case Op::Pair: r[ins.c] = pair_encode(r[ins.a], r[ins.b]); break;
      case Op::Proj1: r[ins.b] = tuple_project(1, 2, r[ins.a]); break;
      case Op::Proj2: r[ins.b] = tuple_project(2, 2, r[ins.a]); break;
      case Op::Query: {
        QueryEvent e;
        e.step = t.steps;
        e.query = r[ins.a];
        e.answer = oracle(e.query);
        e.query_size = e.query.size();
        e.answer_size = e.answer.size();
        r[ins.b] = e.answer;
        t.events.push_back(std::move(e));
        break;
      }
      case Op::Jmp: next = m.target_index(pc); break;
      case Op::Jz:
        if (r[ins.a].empty()) next = m.target_index(pc);
        break;
      case Op::Jle:
        if (r[ins.a].size() <= r[ins.b].size()) next = m.target_index(pc);
        break;
      case Op::Jeq:
        if (r[ins.a] == r[ins.b]) next = m.target_index(pc);
        break;
      case Op::Jprefix:
        if (is_prefix(r[ins.a], r[ins.b])) next = m.target_index(pc);
        break;
      case Op::FirstBit:
        if (!r[ins.a].empty()) next = r[ins.a].bit(0) ? m.target2_index(pc) : m.target_index(pc);
        break;
      case Op::Halt:
        t.output = r[ins.a];
        t.halted = true;
        t.halt_pc = pc;
        return t;
    }
    pc = next;
  }
}

std::size_t count_lookahead_revisions(const std::vector<std::size_t>& query_sizes) {
  std::size_t count = 0;
  std::optional<std::size_t> best;
  for (std::size_t q : query_sizes) {
    if (!best || q > *best) {
      ++count;
      best = q;
    }
  }
  return count;
}

std::size_t count_length_revisions(std::size_t input_length,
                                   const std::vector<std::size_t>& answer_sizes) {
  std::size_t count = 0;
  std::size_t best = input_length;
  for (std::size_t s : answer_sizes) {
    if (s > best) ++count;
    best = std::max(best, s);
  }
  return count;
}

RunMetrics metrics(const Trace& t) {
  RunMetrics out;
  out.steps = t.steps;
  out.m = t.input_length();
  out.m_series.push_back({0, out.m});
  std::vector<std::size_t> qs;
  std::vector<std::size_t> as;
  for (const auto& e : t.events) {
    qs.push_back(e.query_size);
    as.push_back(e.answer_size);
    if (e.answer_size > out.m) {
      out.m = e.answer_size;
      out.m_series.push_back({e.step, out.m});
    }
  }
  out.lookahead_revisions = count_lookahead_revisions(qs);
  out.length_revisions = count_length_revisions(t.input_length(), as);
  return out;
}

bool check_step_count_plain(const Trace& t, const UnaryPolynomial& p) {
  return BigNat(t.steps) <= p(BigNat(metrics(t).m));
}

bool check_step_count_ks(const Trace& t, const UnaryPolynomial& p) {
  // m_k is constant on [from_step, next from_step - 1]; the largest k of each
  // segment is the binding one.
  auto series = metrics(t).m_series;
  for (std::size_t i = 0; i < series.size(); ++i) {
    std::uint64_t last_k = i + 1 < series.size() ? series[i + 1].from_step - 1 : t.steps;
    if (BigNat(last_k) > p(BigNat(series[i].m))) return false;
  }
  return true;
}

FiniteTable replay_table(const Trace& t, const BitString& fallback) {
  FiniteTable table;
  table.fallback = fallback;
  for (const auto& e : t.events) table.entries.emplace(e.query, e.answer);
  return table;
}

FiniteTable truncated_replay_table(const Trace& t, std::size_t j) {
  FiniteTable table;
  for (const auto& e : t.events) {
    if (table.entries.size() >= j) break;
    table.entries.emplace(e.query, e.answer);
  }
  return table;
}

namespace {

struct NeedChoice {};

struct Explorer {
  const Machine& m;
  std::size_t n;
  std::uint64_t fuel;
  std::uint64_t max_runs;
  std::vector<BitString> answers;  // every string of length <= n
  std::uint64_t runs = 0;
  std::uint64_t best = 0;

  void explore(const BitString& input, std::vector<std::size_t>& choices) {
    if (++runs > max_runs) {
      throw EnumerationCapExceeded("brute_force_step_count: more than " + std::to_string(max_runs) +
                                   " runs explored");
    }
    auto seen = std::make_shared<std::map<BitString, BitString>>();
    const std::vector<std::size_t>* script = &choices;
    const std::vector<BitString>* pool = &answers;
    Oracle lazy("brute-force", [seen, script, pool](const BitString& q) {
      auto it = seen->find(q);
      if (it != seen->end()) return it->second;
      if (seen->size() >= script->size()) throw NeedChoice{};
      BitString a = (*pool)[(*script)[seen->size()]];
      seen->emplace(q, a);
      return a;
    });
    try {
      Trace t = run(m, lazy, input, fuel);
      best = std::max(best, t.steps);
    } catch (const NeedChoice&) {
      for (std::size_t i = 0; i < answers.size(); ++i) {
        choices.push_back(i);
        explore(input, choices);
        choices.pop_back();
      }
    }
  }
};

}  // namespace

std::uint64_t brute_force_step_count(const Machine& m, std::size_t n, std::uint64_t fuel,
                                     std::uint64_t max_runs) {
  if (n > kDefaultEnumerationCap) {
    throw EnumerationCapExceeded("brute_force_step_count: n = " + std::to_string(n) +
                                 " exceeds the enumeration cap " +
                                 std::to_string(kDefaultEnumerationCap));
  }
  Explorer ex{m, n, fuel, max_runs, {}, 0, 0};
  for (std::size_t len = 0; len <= n; ++len) {
    for (auto& s : all_strings_of_length(len)) ex.answers.push_back(s);
  }
  for (const auto& input : ex.answers) {
    std::vector<std::size_t> choices;
    ex.explore(input, choices);
  }
  return ex.best;
}

}  // namespace typetwo
