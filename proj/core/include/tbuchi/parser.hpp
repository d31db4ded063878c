#pragma once

#include <stdexcept>
#include <string>

#include "tbuchi/automaton.hpp"

namespace tbuchi {

class ParseError : public std::runtime_error {
 public:
  ParseError(unsigned line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  unsigned line() const { return line_; }

 private:
  unsigned line_;
};

/// Parses a single automaton in the line-oriented format:
///
///   # comment
///   clock x y
///   state a init
///   state b accepting
///   trans a -> b sync go guard x>=1 & y<2 reset x y
///
/// Sections must appear in order: clocks, states, transitions. Exactly one
/// state carries the `init` flag.
Tba parse_tba(const std::string& text);

/// Reads a model file: either a single automaton, or a network
///
///   system name
///   process path/to/component.tba
///   process {
///     ...inline automaton...
///   }
///   accepting-component 2
///
/// Relative process paths resolve against the model file's directory.
/// Networks are flattened into one automaton with product().
Tba parse_model_file(const std::string& path);

/// Serializes in the format accepted by parse_tba (round-trips exactly).
std::string render_tba(const Tba& a);

}  // namespace tbuchi
