#include "henkin/fixtures.hpp"

#include "henkin/evaluator.hpp"
#include "henkin/reducer.hpp"

namespace henkin::fixtures {

  namespace {
    Formula all(std::vector<Formula> fs) {
      return Formula::conjunction(std::move(fs));
    }

    std::vector<Formula> formulas(std::vector<Clause> const& clauses) {
      std::vector<Formula> out;
      for (auto const& c : clauses) {
        out.push_back(c.formula);
      }
      return out;
    }

    std::string const h12_rows[] = {"a", "b", "c", "d", "e", "cc"};
  }  // namespace

  Presentation ceitin_presentation() {
    std::vector<Equation> eqs;
    for (auto [l, r] : {std::pair{"ac", "ca"},
                        {"ad", "da"},
                        {"bc", "cb"},
                        {"bd", "db"},
                        {"eca", "ce"},
                        {"edb", "de"},
                        {"cca", "ccae"}}) {
      eqs.push_back({Word(l), Word(r)});
    }
    return Presentation(std::move(eqs));
  }

  ////////////////////////////////////////////////////////////////////////
  // Twelve one-to-one rows
  ////////////////////////////////////////////////////////////////////////

  HenkinPrefix ceitin_h12_prefix() {
    std::vector<Variable>    us;
    std::vector<Existential> es;
    for (auto const& q : h12_rows) {
      for (auto const* prime : {"", "'"}) {
        Variable x("x" + std::string(prime) + "_" + q);
        us.push_back(x);
        es.push_back({Variable("y" + std::string(prime) + "_" + q), {x}});
      }
    }
    return HenkinPrefix(std::move(us), std::move(es));
  }

  std::vector<Clause> ceitin_h12_clauses() {
    std::vector<Clause> out;
    for (auto const& q : h12_rows) {
      out.push_back({"psi_" + q,
                     implies(eq("x_" + q, "x'_" + q), eq("y_" + q, "y'_" + q))});
    }
    out.push_back(
        {"phi",
         implies(all({eq("x_c", "x_cc"), eq("y_c", "x'_c")}),
                 eq("y'_c", "y_cc"))});
    out.push_back(
        {"phi0",
         implies(all({eq("x_a", "x_c"), eq("x'_a", "y_c"), eq("x'_c", "y_a")}),
                 eq("y'_c", "y'_a"))});
    out.push_back(
        {"phi1",
         implies(all({eq("x_a", "x_d"), eq("x'_a", "y_d"), eq("x'_d", "y_a")}),
                 eq("y'_d", "y'_a"))});
    out.push_back(
        {"phi2",
         implies(all({eq("x_b", "x_c"), eq("x'_b", "y_c"), eq("x'_c", "y_b")}),
                 eq("y'_c", "y'_b"))});
    out.push_back(
        {"phi3",
         implies(all({eq("x_b", "x_d"), eq("x'_b", "y_d"), eq("x'_d", "y_b")}),
                 eq("y'_d", "y'_b"))});
    out.push_back({"phi4",
                   implies(all({eq("x_a", "x'_e"), eq("y_a", "x_c"),
                                eq("y'_e", "x'_c"), eq("x_e", "y_c")}),
                           eq("y_e", "y'_c"))});
    out.push_back({"phi5",
                   implies(all({eq("x_b", "x'_e"), eq("y_b", "x_d"),
                                eq("y_d", "x_e"), eq("y'_e", "x'_d")}),
                           eq("y_e", "y'_d"))});
    out.push_back({"phi6",
                   implies(all({eq("x_a", "x'_e"), eq("y_a", "x_cc"),
                                eq("y'_e", "x'_a"), eq("y'_a", "x'_cc")}),
                           eq("y_cc", "y'_cc"))});
    return out;
  }

  Formula ceitin_h12() {
    return Formula::branch(ceitin_h12_prefix(),
                           all(formulas(ceitin_h12_clauses())));
  }

  Formula ceitin_h12_with_query(Equation const& q) {
    std::map<Letter, reduce::RowVars> rows;
    for (auto c : q.letters()) {
      std::string tag(1, c.symbol);
      if (c.symbol > 'e') {
        throw std::invalid_argument("letter '" + tag
                                    + "' is not a generator of C");
      }
      rows.emplace(c, reduce::RowVars{Variable("x_" + tag),
                                      Variable("y_" + tag)});
    }
    std::vector<Variable> t, s;
    for (std::size_t i = 0; i <= q.lhs.size(); ++i) {
      t.emplace_back("t" + std::to_string(i));
    }
    for (std::size_t i = 0; i <= q.rhs.size(); ++i) {
      s.emplace_back("s" + std::to_string(i));
    }
    auto matrix = formulas(ceitin_h12_clauses());
    matrix.push_back(reduce::separation(q, rows, t, s));
    std::vector<Variable> witnesses = t;
    witnesses.insert(witnesses.end(), s.begin(), s.end());
    return Formula::exists(
        std::move(witnesses),
        Formula::branch(ceitin_h12_prefix(), all(std::move(matrix))));
  }

  ////////////////////////////////////////////////////////////////////////
  // Two universals
  ////////////////////////////////////////////////////////////////////////

  HenkinPrefix ceitin_e10_prefix() {
    Variable                 x1("x1"), x2("x2");
    std::vector<Existential> es;
    for (auto const* y : {"y_a", "y_ca", "y_da", "y_b", "y_cb", "y_db", "y_e",
                          "y_eca", "y_de", "y_cca"}) {
      es.push_back({Variable(y), {x1}});
    }
    for (auto const* y :
         {"y_c", "y_ac", "y_d", "y_ad", "y_bc", "y_bd", "y'_e", "y'_cca"}) {
      es.push_back({Variable(y), {x2}});
    }
    return HenkinPrefix({x1, x2}, std::move(es));
  }

  std::vector<Clause> ceitin_e10_clauses() {
    struct Row {
      char const* guard_l;
      char const* guard_r;
      char const* lhs;
      char const* rhs;
    };
    static constexpr Row gamma[] = {{"y_a", "x2", "y_c", "y_ca"},
                                    {"y_c", "x1", "y_a", "y_ac"},
                                    {"y_a", "x2", "y_da", "y_d"},
                                    {"y_d", "x1", "y_ad", "y_a"},
                                    {"y_b", "x2", "y_cb", "y_c"},
                                    {"y_c", "x1", "y_b", "y_bc"},
                                    {"y_b", "x2", "y_db", "y_d"},
                                    {"y_d", "x1", "y_bd", "y_b"},
                                    {"x1", "x2", "y_e", "y'_e"},
                                    {"y_ca", "x2", "y_eca", "y'_e"},
                                    {"y_e", "x2", "y_de", "y_d"},
                                    {"y_ca", "x2", "y_cca", "y_c"},
                                    {"x1", "x2", "y_cca", "y'_cca"}};
    std::vector<Clause> out;
    int                 i = 1;
    for (auto const& g : gamma) {
      out.push_back({"gamma_" + std::to_string(i++),
                     implies(eq(g.guard_l, g.guard_r), eq(g.lhs, g.rhs))});
    }
    out.push_back({"gamma_0123",
                   implies(eq("x1", "x2"),
                           all({eq("y_ca", "y_ac"), eq("y_ad", "y_da"),
                                eq("y_bc", "y_cb"), eq("y_db", "y_bd")}))});
    out.push_back({"gamma_4", implies(eq("y_e", "x2"), eq("y_eca", "y_c"))});
    out.push_back({"gamma_5", implies(eq("y_db", "x2"), eq("y_de", "y'_e"))});
    out.push_back(
        {"gamma_6", implies(eq("y_e", "x2"), eq("y_cca", "y'_cca"))});
    return out;
  }

  Formula ceitin_e10() {
    return Formula::branch(ceitin_e10_prefix(),
                           all(formulas(ceitin_e10_clauses())));
  }

  ////////////////////////////////////////////////////////////////////////
  // Finiteness
  ////////////////////////////////////////////////////////////////////////

  Formula infinity_sentence() {
    auto prefix = mk_prefix(vars({"x", "z"}), vars({"y", "w"}),
                            {{Variable("y"), vars({"x"})},
                             {Variable("w"), vars({"z"})}});
    return Formula::exists(
        vars({"t"}),
        Formula::branch(prefix.value(),
                        iff(eq("y", "w"), eq("x", "z")) && neq("t", "y")));
  }

  Formula ehrenfeucht_finiteness() {
    return !infinity_sentence();
  }

  std::vector<ClauseStatus> identity_witness_report(
      HenkinPrefix const&        prefix,
      std::vector<Clause> const& clauses,
      std::uint32_t              m) {
    auto const&               us = prefix.universals();
    std::vector<ClauseStatus> out;
    for (auto const& c : clauses) {
      bool                 holds = true;
      std::vector<eval::Element> tuple(us.size(), 0);
      while (holds) {
        eval::Valuation env;
        for (std::size_t i = 0; i < us.size(); ++i) {
          env[us[i]] = tuple[i];
        }
        for (auto const& e : prefix.existentials()) {
          env[e.var] = e.deps.empty() ? 0 : env.at(e.deps.front());
        }
        holds = eval::evaluate(c.formula, eval::DomainSize(m), env).value;
        std::size_t k = tuple.size();
        while (k > 0 && ++tuple[k - 1] == m) {
          tuple[--k] = 0;
        }
        if (k == 0) {
          break;
        }
      }
      out.push_back({c.id, holds});
    }
    return out;
  }

}  // namespace henkin::fixtures
