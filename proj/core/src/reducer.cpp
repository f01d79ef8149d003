#include "henkin/reducer.hpp"

#include <string>

namespace henkin::reduce {

  namespace {
    Variable indexed(char prefix, std::size_t i, std::size_t j) {
      return Variable(std::string(1, prefix) + std::to_string(i) + "_"
                      + std::to_string(j));
    }

    Variable numbered(char prefix, std::size_t i) {
      return Variable(std::string(1, prefix) + std::to_string(i));
    }

    Formula equal(Variable const& a, Variable const& b) {
      return Formula::equal(a, b);
    }
  }  // namespace

  RowPlan plan_rows(Presentation const& E, Equation const& q) {
    RowPlan plan;
    auto add_side = [&](Word const& w, std::size_t i, Row::Origin origin,
                        char u, char e) {
      std::vector<std::size_t> idx;
      for (std::size_t j = 1; j <= w.size(); ++j) {
        idx.push_back(plan.rows.size());
        plan.rows.push_back(
            {indexed(u, i, j), indexed(e, i, j), w[j - 1], origin, i, j});
      }
      return idx;
    };
    for (std::size_t i = 1; i <= E.equations().size(); ++i) {
      auto const& eq = E.equations()[i - 1];
      plan.lhs_rows.push_back(add_side(eq.lhs, i, Row::Origin::lhs, 'x', 'y'));
      plan.rhs_rows.push_back(add_side(eq.rhs, i, Row::Origin::rhs, 'z', 'r'));
    }
    for (auto c : q.letters()) {
      std::string tag(1, c.symbol);
      plan.designated.emplace(c, plan.rows.size());
      plan.rows.push_back({Variable("u_" + tag), Variable("e_" + tag), c,
                           Row::Origin::query, 0, 0});
    }
    for (std::size_t i = 0; i <= q.lhs.size(); ++i) {
      plan.t.push_back(numbered('t', i));
    }
    for (std::size_t i = 0; i <= q.rhs.size(); ++i) {
      plan.s.push_back(numbered('s', i));
    }
    return plan;
  }

  HenkinPrefix row_prefix(RowPlan const& plan) {
    std::vector<Variable>    us;
    std::vector<Existential> es;
    for (auto const& r : plan.rows) {
      us.push_back(r.universal);
      es.push_back({r.existential, {r.universal}});
    }
    return HenkinPrefix(std::move(us), std::move(es));
  }

  Formula build_phi0(RowPlan const& plan) {
    std::vector<Formula> out;
    auto const&          rows = plan.rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (rows[i].letter == rows[j].letter) {
          out.push_back(Formula::implication(
              equal(rows[i].universal, rows[j].universal),
              equal(rows[i].existential, rows[j].existential)));
        }
      }
    }
    return conjoin(std::move(out));
  }

  Formula build_phi_eq(std::size_t index, RowPlan const& plan) {
    auto const& xs   = plan.lhs_rows.at(index);
    auto const& zs   = plan.rhs_rows.at(index);
    auto const& rows = plan.rows;
    std::vector<Formula> chain;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      chain.push_back(
          equal(rows[xs[i]].universal, rows[xs[i + 1]].existential));
    }
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
      chain.push_back(
          equal(rows[zs[i]].universal, rows[zs[i + 1]].existential));
    }
    auto head = Formula::implication(
        equal(rows[xs.back()].universal, rows[zs.back()].universal),
        equal(rows[xs.front()].existential, rows[zs.front()].existential));
    if (chain.empty()) {
      return head;
    }
    return Formula::implication(conjoin(std::move(chain)), std::move(head));
  }

  Formula separation(Equation const&                 q,
                     std::map<Letter, RowVars> const& rows,
                     std::vector<Variable> const&     t,
                     std::vector<Variable> const&     s) {
    std::vector<Formula> out;
    auto walk = [&](Word const& w, std::vector<Variable> const& seq) {
      for (std::size_t i = 1; i <= w.size(); ++i) {
        auto const& row = rows.at(w[i - 1]);
        out.push_back(Formula::implication(equal(row.universal, seq.at(i)),
                                           equal(row.existential, seq[i - 1])));
      }
    };
    walk(q.lhs, t);
    walk(q.rhs, s);
    out.push_back(equal(t.at(q.lhs.size()), s.at(q.rhs.size())));
    out.push_back(Formula::negation(equal(t.front(), s.front())));
    return conjoin(std::move(out));
  }

  Formula build_phi_neq(Equation const& q, RowPlan const& plan) {
    std::map<Letter, RowVars> rows;
    for (auto const& [c, i] : plan.designated) {
      rows.emplace(c, RowVars{plan.rows[i].universal, plan.rows[i].existential});
    }
    return separation(q, rows, plan.t, plan.s);
  }

  Formula compile(Presentation const& E, Equation const& q, Mutation mutation) {
    auto plan = plan_rows(E, q);

    std::vector<Formula> matrix{build_phi0(plan)};
    for (std::size_t i = 0; i < E.equations().size(); ++i) {
      matrix.push_back(build_phi_eq(i, plan));
    }
    auto neq = build_phi_neq(q, plan);
    if (mutation == Mutation::drop_disequality) {
      auto ops = std::vector<Formula>(neq.operands().begin(),
                                      neq.operands().end() - 1);
      neq      = conjoin(std::move(ops));
    }
    matrix.push_back(std::move(neq));

    std::vector<Variable> witnesses = plan.t;
    witnesses.insert(witnesses.end(), plan.s.begin(), plan.s.end());
    return Formula::exists(
        std::move(witnesses),
        Formula::branch(row_prefix(plan), conjoin(std::move(matrix))));
  }

}  // namespace henkin::reduce
