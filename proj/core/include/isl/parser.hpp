#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "isl/sequent.hpp"

namespace isl {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, SourceSpan s) : std::runtime_error(msg), span(s) {}
  SourceSpan span;
};

/// Antecedent split into two parts plus the shared succedent.
struct SplitSequent {
  Multiset left;
  Multiset right;
  std::optional<Formula> succ;

  Sequent whole() const;
};

// Grammar (ASCII; ¬ ∧ ∨ → □ ⊥ ⇒ accepted as aliases):
//   imp   := or ('->' imp)?
//   or    := and ('|' and)*
//   and   := unary ('&' unary)*
//   unary := '~' unary | '[]' unary | 'false' | ident | '(' imp ')'
Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);
/// "Γ1 ; Γ2 => Δ"
SplitSequent parse_split(std::string_view text);

std::string render(Formula f);
std::string render(const Sequent& s);
std::string render(const Multiset& m);
std::string render(const SplitSequent& s);

/// Escapes quotes and backslashes for Graphviz labels.
std::string dot_escape(std::string_view s);

/// "<input>\n   ^^^ message" diagnostic for CLI output.
std::string format_diagnostic(std::string_view input, const ParseError& e);

}  // namespace isl
