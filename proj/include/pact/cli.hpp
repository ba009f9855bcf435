#pragma once

// System definitions and the command implementations behind tools/pact.
// Commands write JSON (or DOT) to `out`, diagnostics to `err`, and return
// the process exit code: 0 ok, 1 usage/parse, 2 property violation,
// 3 resource cap exceeded.

#include "pact/filtration.hpp"
#include "pact/partial_action.hpp"
#include "pact/prefix_map.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pact {

struct SystemDefinition
{
  enum class Kind { Odometer, Rules };

  std::string name;
  Kind kind = Kind::Odometer;
  std::vector<PrefixRule> rules;
  /// "open": the rules enumerate a generated map; "clopen": one PrefixMap.
  bool exhausts_open = false;
  std::optional<std::vector<LevelParams>> schedule;
  std::optional<int> bound;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> levels;

  /// Throws InvalidMap if the rules do not form a valid map.
  Action action() const;
};

/// Parses a SystemDefinition JSON document. Unknown fields are rejected.
/// Throws ParseError with "line L, column C" for malformed JSON.
SystemDefinition parse_system(const std::string& text);

struct CommandOptions
{
  std::optional<int> bound;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> level;
  std::optional<std::size_t> levels;
  std::uint64_t seed = 1;
  std::string out = "json";
  std::size_t cap = 64;
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::optional<int> t;
  std::optional<int> s;
  std::optional<std::string> base;
  std::size_t trials = 100;
  std::optional<int> support;
};

const std::vector<std::string>& command_names();

/// Reads and parses `file`, then runs `command`.
int run_command(const std::string& command, const std::string& file, const CommandOptions& options, std::ostream& out,
                std::ostream& err);

/// Same, with the definition text already in memory.
int run_command_on_text(const std::string& command, const std::string& text, const CommandOptions& options,
                        std::ostream& out, std::ostream& err);

} // namespace pact
