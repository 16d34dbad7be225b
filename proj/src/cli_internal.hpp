#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "typetwo/io.hpp"
#include "typetwo/sopoly.hpp"

namespace typetwo::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Thrown by commands to leave with a specific exit code after printing `report`.
struct Exit {
  int code;
  Json report;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
};

BitString parse_bits(const std::string& text);
/// "a,b,c" -> <a,b,c>; a single component is returned as is.
BitString parse_tuple(const std::string& text);
/// --input or --input-tuple, exactly one of them.
BitString input_from(const std::optional<std::string>& input, const std::optional<std::string>& tuple);
UnaryPolynomial poly_or_library(const std::optional<std::string>& text, const std::string& machine,
                                const char* flag);
void emit(Context& ctx, const Json& j);

// Each registers one subcommand; the callback runs when it is selected.
void add_run(CLI::App& app, Context& ctx);
void add_print(CLI::App& app, Context& ctx);
void add_sop(CLI::App& app, Context& ctx);
void add_brute_force(CLI::App& app, Context& ctx);
void add_oracle_size(CLI::App& app, Context& ctx);
void add_lambda(CLI::App& app, Context& ctx);
void add_factorize(CLI::App& app, Context& ctx);
void add_spt_to_mpt(CLI::App& app, Context& ctx);
void add_inline_compose(CLI::App& app, Context& ctx);
void add_budgeted_compose(CLI::App& app, Context& ctx);
void add_adversary(CLI::App& app, Context& ctx);

}  // namespace typetwo::cli
