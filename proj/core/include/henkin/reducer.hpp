// Compiler from a semigroup word-problem instance (E, v = w) to a sentence
//
//   exists t0..tl s0..sk H{ rows } . phi0 & phi_{v1=w1} & ... & phi_{v!=w}
//
// that is true on {0..m-1} exactly when there are unary functions f_c on
// {0..m-1}, one per letter, satisfying every equation of E pointwise while
// tr(v) and tr(w) differ at some point.
//
// Words act right to left: tr(c1...ck)(p) = f_c1(f_c2(...f_ck(p)...)).
// Every row is a pair (universal u, existential e) with e depending on u
// alone, so the choice function of a row is a unary function; phi0 forces
// rows of the same letter to choose the same function.

#ifndef HENKIN_REDUCER_HPP
#define HENKIN_REDUCER_HPP

#include <map>
#include <vector>

#include "henkin/syntax.hpp"
#include "henkin/words.hpp"

namespace henkin::reduce {

  struct Row {
    enum class Origin { lhs, rhs, query };

    Variable    universal;
    Variable    existential;
    Letter      letter;
    Origin      origin;
    std::size_t equation = 0;  // 1-based; 0 for query rows
    std::size_t position = 0;  // 1-based position within the side

    friend bool operator==(Row const&, Row const&) = default;
  };

  struct RowPlan {
    std::vector<Row>    rows;
    std::vector<Variable> t, s;  // t0..tl and s0..sk
    // Row indices of each equation's sides, by position.
    std::vector<std::vector<std::size_t>> lhs_rows, rhs_rows;
    // The one query row per letter of the query.
    std::map<Letter, std::size_t> designated;

    std::size_t size() const noexcept { return rows.size(); }
  };

  // Rows x{i}_{j}/y{i}_{j} for position j of the left side of equation i,
  // z{i}_{j}/r{i}_{j} for the right side, u_c/e_c for query letter c, and
  // first-order witnesses t0..tl, s0..sk.
  RowPlan plan_rows(Presentation const& E, Equation const& q);

  HenkinPrefix row_prefix(RowPlan const& plan);

  // (u1 = u2 -> e1 = e2) for every pair of rows carrying the same letter.
  Formula build_phi0(RowPlan const& plan);

  // Chains the rows of equation `index` (0-based) so that, with
  // x_|v| = z_|w|, the heads y_1 and r_1 must agree:
  //   (x_i = y_{i+1} ... & z_i = r_{i+1} ...) -> (x_|v| = z_|w| -> y_1 = r_1)
  Formula build_phi_eq(std::size_t index, RowPlan const& plan);

  struct RowVars {
    Variable universal;
    Variable existential;
  };

  // The separating gadget for the query v = w over arbitrary rows: walks
  // t_l -> ... -> t_0 along v and s_k -> ... -> s_0 along w, then demands
  // t_l = s_k and t_0 != s_0.
  Formula separation(Equation const&                 q,
                     std::map<Letter, RowVars> const& rows,
                     std::vector<Variable> const&     t,
                     std::vector<Variable> const&     s);

  Formula build_phi_neq(Equation const& q, RowPlan const& plan);

  // Test hook: deliberately broken reductions for mutation checks.
  enum class Mutation { none, drop_disequality };

  Formula compile(Presentation const& E,
                  Equation const&     q,
                  Mutation            mutation = Mutation::none);

}  // namespace henkin::reduce

#endif  // HENKIN_REDUCER_HPP
