#ifndef SINGSPEC_CLI_HPP
#define SINGSPEC_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "singspec/document.hpp"
#include "singspec/rational.hpp"

namespace singspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;   // unparseable input, variant mismatch, validation failure
inline constexpr int kExitInternal = 2;  // an identity failed on validated input

using Json = nlohmann::ordered_json;

struct Flags {
  std::optional<Rational> alpha;
  Rational max{1};
};

struct Result {
  int exit_code = kExitOk;
  Json output;
};

const std::vector<std::string>& commands();

/// Dispatches one command. Never throws for bad input: errors become an
/// {"error": ...} document with the matching exit code.
Result run(const std::string& command, const InputDocument& doc, const Flags& flags);

/// Plain-text rendering of a command's output document.
std::string render_table(const Json& output);

}  // namespace singspec::cli

#endif  // SINGSPEC_CLI_HPP
