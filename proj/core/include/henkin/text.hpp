// Concrete syntax: parser and printer for formulas, presentations and
// equations.
//
// Formula grammar, loosest binding first:
//
//   formula  := imp ('<->' imp)*                 left associative
//   imp      := or ('->' imp)?                   right associative
//   or       := and ('|' and)*
//   and      := unary ('&' unary)*
//   unary    := '~' unary | primary
//   primary  := '(' formula ')' | 'true' | 'false' | name ('=' | '!=') name
//             | ('forall' | 'exists') name+ '.' formula
//             | 'H' '{' 'forall' name* ';' [dep (',' dep)*] '}' '.' formula
//   dep      := name '(' name* ')'
//
// Quantifier bodies extend as far right as possible. `#` starts a comment
// that runs to the end of the line.

#ifndef HENKIN_TEXT_HPP
#define HENKIN_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "henkin/syntax.hpp"
#include "henkin/words.hpp"

namespace henkin::text {

  struct SourceSpan {
    std::size_t line   = 1;
    std::size_t column = 1;
    std::size_t length = 0;

    friend bool operator==(SourceSpan const&, SourceSpan const&) = default;
  };

  enum class ErrorKind { lexical, syntax, semantic };

  class ParseError : public std::runtime_error {
   public:
    ParseError(ErrorKind kind, SourceSpan span, std::string const& message);

    ErrorKind         kind() const noexcept { return kind_; }
    SourceSpan const& span() const noexcept { return span_; }
    // The message without the "line:col:" prefix.
    std::string const& detail() const noexcept { return detail_; }

   private:
    ErrorKind   kind_;
    SourceSpan  span_;
    std::string detail_;
  };

  Formula parse_formula(std::string_view text);

  // Canonical text. Parentheses are emitted only where the precedence table
  // requires them, plus around any quantifier that is an operand of a
  // connective.
  std::string print_formula(Formula const& f);

  std::string print_prefix(HenkinPrefix const& p);

  // One `word = word` equation per nonblank, noncomment line.
  Presentation parse_presentation(std::string_view text);

  Equation parse_equation(std::string_view text);

}  // namespace henkin::text

#endif  // HENKIN_TEXT_HPP
