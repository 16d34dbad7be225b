#include "typetwo/io.hpp"

#include <fstream>
#include <sstream>

#include "typetwo/operators.hpp"

namespace typetwo {

namespace {

BitString bits_field(const Json& j, const std::string& what) {
  if (!j.is_string()) throw FormatError(what + " must be a string of 0s and 1s");
  try {
    return BitString(j.get<std::string>());
  } catch (const MalformedEncoding&) {
    throw FormatError(what + " must be a string of 0s and 1s");
  }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

Oracle oracle_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("oracle file must hold a JSON object");
  if (j.contains("builtin")) {
    const Json& name = j.at("builtin");
    if (!name.is_string() || !is_builtin_oracle(name.get<std::string>())) {
      throw FormatError("unknown builtin oracle " + name.dump());
    }
    return builtin_oracle(name.get<std::string>());
  }
  FiniteTable table;
  if (j.contains("default")) table.fallback = bits_field(j.at("default"), "default");
  if (j.contains("entries")) {
    const Json& e = j.at("entries");
    if (!e.is_object()) throw FormatError("entries must be an object");
    for (const auto& [k, v] : e.items()) {
      table.entries[bits_field(Json(k), "entry key")] = bits_field(v, "entry value");
    }
  }
  return Oracle(std::move(table));
}

Json oracle_to_json(const FiniteTable& table) {
  Json entries = Json::object();
  for (const auto& [k, v] : table.entries) entries[k.str()] = v.str();
  return Json{{"default", table.fallback.str()}, {"entries", entries}};
}

Oracle load_oracle(const std::string& spec) {
  if (is_builtin_oracle(spec)) return builtin_oracle(spec);
  Json j;
  try {
    j = Json::parse(read_text_file(spec));
  } catch (const Json::parse_error& e) {
    throw FormatError(spec + ": " + e.what());
  }
  return oracle_from_json(j);
}

Machine load_machine(const std::string& spec) {
  if (is_library_machine(spec)) return library_info(spec).build();
  Machine m = parse_machine_text(read_text_file(spec));
  if (m.name().empty()) m.set_name(std::filesystem::path(spec).stem().string());
  return m;
}

Json trace_to_json(const Trace& t) {
  RunMetrics mt = metrics(t);
  Json events = Json::array();
  for (const auto& e : t.events) {
    events.push_back({{"step", e.step},
                      {"query_size", e.query_size},
                      {"answer_size", e.answer_size},
                      {"query", e.query.str()},
                      {"answer", e.answer.str()}});
  }
  return Json{{"steps", t.steps},
              {"input_length", t.input_length()},
              {"output", t.output.str()},
              {"halted", t.halted},
              {"events", events},
              {"lookahead_revisions", mt.lookahead_revisions},
              {"length_revisions", mt.length_revisions}};
}

}  // namespace typetwo
