// Truth of formulas on finite pure-equality structures {0, ..., m-1}.
//
// Two engines share one contract:
//
//  * `evaluate` compiles the formula to slot-indexed form and decides each
//    Henkin node by a backtracking search over partially filled Skolem
//    tables. The matrix is split into its top-level conjuncts; each
//    conjunct only has to hold for every assignment of the universals it
//    actually observes (directly or through an existential's dependency
//    list). Every such (conjunct, assignment) pair becomes a constraint on
//    the handful of table entries it reads. Search fills entries with
//    forward checking and chronological backtracking; independent groups
//    of entries are solved separately.
//
//  * `evaluate_naive` walks the syntax tree and enumerates every
//    combination of complete tables. It exists to check the other engine.
//
// Both throw `ResourceLimitExceeded` when their node budget runs out; that
// outcome is never reported as `false`.

#ifndef HENKIN_EVALUATOR_HPP
#define HENKIN_EVALUATOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "henkin/limits.hpp"
#include "henkin/syntax.hpp"

namespace henkin::eval {

  using Element = std::uint32_t;

  class DomainSize {
   public:
    explicit DomainSize(std::uint32_t m);
    std::uint32_t value() const noexcept { return m_; }

    friend bool operator==(DomainSize, DomainSize) = default;
    friend auto operator<=>(DomainSize, DomainSize) = default;

   private:
    std::uint32_t m_;
  };

  using Valuation = std::map<Variable, Element>;

  // Choice function of one existential. Entries are indexed by dependency
  // tuples in lexicographic order, the first dependency most significant.
  struct SkolemTable {
    Variable             owner;
    std::size_t          arity = 0;
    std::vector<Element> entries;

    Element operator()(std::span<Element const> args, std::uint32_t m) const;

    friend bool operator==(SkolemTable const&, SkolemTable const&) = default;
  };

  using henkin::default_budget;
  using henkin::ResourceLimitExceeded;

  struct Options {
    // Search-tree nodes: quantifier instantiations, table-entry decisions
    // (and, for the naive engine, complete table combinations).
    std::uint64_t budget = default_budget;
  };

  struct Evaluation {
    bool value = false;
    // Tables of the most recent Henkin node that was found true outside of
    // any negation or enclosing Henkin matrix; empty if there is none.
    std::vector<SkolemTable> witness;
    std::uint64_t            nodes = 0;

    explicit operator bool() const noexcept { return value; }
  };

  // Preconditions (checked, std::invalid_argument): `f` validates without
  // errors; every free variable of `f` is bound by `env` to an element < m.
  Evaluation evaluate(Formula const&   f,
                      DomainSize       size,
                      Valuation const& env  = {},
                      Options const&   opts = {});

  Evaluation evaluate_naive(Formula const&   f,
                            DomainSize       size,
                            Valuation const& env  = {},
                            Options const&   opts = {});

  // Smallest m <= max_size with `f` true on {0..m-1}. Over the empty
  // vocabulary there is one structure per size, so this is a complete
  // finite-model search up to the bound. The exception carries the size
  // being searched when the budget ran out; the budget applies per size.
  std::optional<DomainSize> find_min_model(Formula const& f,
                                           std::uint32_t  max_size,
                                           Options const& opts = {});

  // One line per table: `y1: (0,1)->2 (0,2)->0 ...`.
  std::string format_witness(std::span<SkolemTable const> tables,
                             std::uint32_t                m);

}  // namespace henkin::eval

#endif  // HENKIN_EVALUATOR_HPP
