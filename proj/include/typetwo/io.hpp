#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "typetwo/interpreter.hpp"
#include "typetwo/machine.hpp"
#include "typetwo/oracle.hpp"

namespace typetwo {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"default": "...", "entries": {"0110": "11"}} or {"builtin": "name"}.
Oracle oracle_from_json(const Json& j);
Json oracle_to_json(const FiniteTable& table);
/// A builtin name, or a path to an oracle file.
Oracle load_oracle(const std::string& spec);

/// A library machine name, or a path to a machine-text file.
Machine load_machine(const std::string& spec);

/// steps, input_length, output, events [{step, query_size, answer_size, query,
/// answer}], lookahead_revisions, length_revisions.
Json trace_to_json(const Trace& t);

}  // namespace typetwo
