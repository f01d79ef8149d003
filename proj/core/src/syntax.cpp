#include "henkin/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace henkin {

  bool is_legal_name(std::string_view name) noexcept {
    if (name.empty()) {
      return false;
    }
    auto is_alpha = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    };
    if (!is_alpha(name.front())) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [&](char c) {
      return is_alpha(c) || (c >= '0' && c <= '9') || c == '_' || c == '\'';
    });
  }

  bool has_errors(std::span<Diagnostic const> diags) noexcept {
    return std::any_of(diags.begin(), diags.end(), [](Diagnostic const& d) {
      return d.severity == Severity::error;
    });
  }

  namespace {
    Diagnostic error(std::string msg) {
      return {Severity::error, std::move(msg)};
    }

    Diagnostic warning(std::string msg) {
      return {Severity::warning, std::move(msg)};
    }

    std::string quoted(Variable const& v) {
      return "'" + v.name() + "'";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // HenkinPrefix
  ////////////////////////////////////////////////////////////////////////

  std::vector<Diagnostic> HenkinPrefix::check() const {
    std::vector<Diagnostic> out;
    std::set<Variable>      seen_a, seen_e;
    for (auto const& u : universals_) {
      if (!is_legal_name(u.name())) {
        out.push_back(error("illegal variable name " + quoted(u)));
      }
      if (!seen_a.insert(u).second) {
        out.push_back(error("duplicate universal " + quoted(u)));
      }
    }
    for (auto const& e : existentials_) {
      if (!is_legal_name(e.var.name())) {
        out.push_back(error("illegal variable name " + quoted(e.var)));
      }
      if (!seen_e.insert(e.var).second) {
        out.push_back(error("duplicate existential " + quoted(e.var)));
      }
      if (seen_a.count(e.var) != 0) {
        out.push_back(
            error(quoted(e.var) + " is both universal and existential"));
      }
      std::set<Variable> seen_d;
      for (auto const& d : e.deps) {
        if (seen_a.count(d) == 0) {
          out.push_back(error(quoted(e.var) + " depends on " + quoted(d)
                              + ", which is not a universal of the prefix"));
        }
        if (!seen_d.insert(d).second) {
          out.push_back(error("duplicate dependency " + quoted(d) + " of "
                              + quoted(e.var)));
        }
      }
    }
    if (universals_.empty() && existentials_.empty()) {
      out.push_back(error("Henkin prefix binds no variables"));
    }
    return out;
  }

  Checked<HenkinPrefix> mk_prefix(std::vector<Variable> const& universals,
                                  std::vector<Variable> const& existentials,
                                  DependencyMap const&         deps) {
    std::vector<Diagnostic>  out;
    std::vector<Existential> rows;
    rows.reserve(existentials.size());
    for (auto const& e : existentials) {
      auto it = deps.find(e);
      if (it == deps.end()) {
        out.push_back(error("missing dependency entry for " + quoted(e)));
        rows.push_back({e, {}});
      } else {
        rows.push_back({e, it->second});
      }
    }
    for (auto const& [e, _] : deps) {
      if (std::find(existentials.begin(), existentials.end(), e)
          == existentials.end()) {
        out.push_back(error("dependency entry for " + quoted(e)
                            + ", which is not an existential of the prefix"));
      }
    }
    HenkinPrefix prefix(universals, std::move(rows));
    auto         inner = prefix.check();
    out.insert(out.end(), inner.begin(), inner.end());
    if (!out.empty()) {
      return out;
    }
    return prefix;
  }

  Checked<HenkinPrefix> build_Hn(std::size_t n) {
    if (n == 0) {
      return std::vector<Diagnostic>{error("H_n requires n >= 1")};
    }
    std::vector<Variable>    xs;
    std::vector<Existential> ys;
    for (std::size_t i = 1; i <= n; ++i) {
      Variable x("x" + std::to_string(i));
      xs.push_back(x);
      ys.push_back({Variable("y" + std::to_string(i)), {x}});
    }
    return HenkinPrefix(std::move(xs), std::move(ys));
  }

  Checked<HenkinPrefix> build_En(std::size_t n) {
    if (n == 0) {
      return std::vector<Diagnostic>{error("E_n requires n >= 1")};
    }
    Variable                 x1("x1"), x2("x2");
    std::vector<Existential> es;
    for (std::size_t i = 1; i <= n; ++i) {
      es.push_back({Variable("y" + std::to_string(i)), {x1}});
    }
    for (std::size_t i = 1; i <= n; ++i) {
      es.push_back({Variable("z" + std::to_string(i)), {x2}});
    }
    return HenkinPrefix({x1, x2}, std::move(es));
  }

  ////////////////////////////////////////////////////////////////////////
  // Formula
  ////////////////////////////////////////////////////////////////////////

  Formula Formula::equal(Variable lhs, Variable rhs) {
    return Formula(std::make_shared<Node const>(
        Node{Kind::equal, std::move(lhs), std::move(rhs), {}, {}, {}}));
  }

  Formula Formula::truth() {
    static Formula const t(
        std::make_shared<Node const>(Node{Kind::truth, {}, {}, {}, {}, {}}));
    return t;
  }

  Formula Formula::falsity() {
    static Formula const f(
        std::make_shared<Node const>(Node{Kind::falsity, {}, {}, {}, {}, {}}));
    return f;
  }

  Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<Node const>(
        Node{Kind::negation, {}, {}, {std::move(f)}, {}, {}}));
  }

  Formula Formula::conjunction(std::vector<Formula> fs) {
    return Formula(std::make_shared<Node const>(
        Node{Kind::conjunction, {}, {}, std::move(fs), {}, {}}));
  }

  Formula Formula::disjunction(std::vector<Formula> fs) {
    return Formula(std::make_shared<Node const>(
        Node{Kind::disjunction, {}, {}, std::move(fs), {}, {}}));
  }

  Formula Formula::implication(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node const>(Node{
        Kind::implication, {}, {}, {std::move(lhs), std::move(rhs)}, {}, {}}));
  }

  Formula Formula::equivalence(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node const>(Node{
        Kind::equivalence, {}, {}, {std::move(lhs), std::move(rhs)}, {}, {}}));
  }

  Formula Formula::forall(std::vector<Variable> vars, Formula body) {
    return Formula(std::make_shared<Node const>(
        Node{Kind::forall, {}, {}, {std::move(body)}, std::move(vars), {}}));
  }

  Formula Formula::exists(std::vector<Variable> vars, Formula body) {
    return Formula(std::make_shared<Node const>(
        Node{Kind::exists, {}, {}, {std::move(body)}, std::move(vars), {}}));
  }

  Formula Formula::branch(HenkinPrefix prefix, Formula body) {
    return Formula(std::make_shared<Node const>(
        Node{Kind::branch, {}, {}, {std::move(body)}, {}, std::move(prefix)}));
  }

  Variable const& Formula::lhs_var() const {
    if (kind() != Kind::equal) {
      throw std::logic_error("lhs_var: not an equality atom");
    }
    return node_->lhs;
  }

  Variable const& Formula::rhs_var() const {
    if (kind() != Kind::equal) {
      throw std::logic_error("rhs_var: not an equality atom");
    }
    return node_->rhs;
  }

  Formula const& Formula::body() const {
    if (!is_quantifier()) {
      throw std::logic_error("body: not a quantifier node");
    }
    return node_->children.front();
  }

  std::vector<Variable> const& Formula::bound() const {
    if (kind() != Kind::forall && kind() != Kind::exists) {
      throw std::logic_error("bound: not a first-order quantifier");
    }
    return node_->vars;
  }

  HenkinPrefix const& Formula::prefix() const {
    if (kind() != Kind::branch) {
      throw std::logic_error("prefix: not a Henkin quantifier");
    }
    return node_->prefix;
  }

  bool operator==(Formula const& a, Formula const& b) {
    if (a.node_ == b.node_) {
      return true;
    }
    auto const& x = *a.node_;
    auto const& y = *b.node_;
    return x.kind == y.kind && x.lhs == y.lhs && x.rhs == y.rhs
           && x.vars == y.vars && x.prefix == y.prefix
           && x.children == y.children;
  }

  Formula conjoin(std::vector<Formula> fs) {
    if (fs.empty()) {
      return Formula::truth();
    }
    if (fs.size() == 1) {
      return std::move(fs.front());
    }
    return Formula::conjunction(std::move(fs));
  }

  Formula disjoin(std::vector<Formula> fs) {
    if (fs.empty()) {
      return Formula::falsity();
    }
    if (fs.size() == 1) {
      return std::move(fs.front());
    }
    return Formula::disjunction(std::move(fs));
  }

  Formula operator!(Formula f) {
    return Formula::negation(std::move(f));
  }

  Formula operator&&(Formula a, Formula b) {
    return Formula::conjunction({std::move(a), std::move(b)});
  }

  Formula operator||(Formula a, Formula b) {
    return Formula::disjunction({std::move(a), std::move(b)});
  }

  Formula eq(std::string_view a, std::string_view b) {
    return Formula::equal(Variable(std::string(a)), Variable(std::string(b)));
  }

  Formula neq(std::string_view a, std::string_view b) {
    return !eq(a, b);
  }

  Formula implies(Formula a, Formula b) {
    return Formula::implication(std::move(a), std::move(b));
  }

  Formula iff(Formula a, Formula b) {
    return Formula::equivalence(std::move(a), std::move(b));
  }

  std::vector<Variable> vars(std::initializer_list<char const*> names) {
    std::vector<Variable> out;
    for (auto const* n : names) {
      out.emplace_back(n);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // free_variables, validate
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<Variable> binder_vars(Formula const& f) {
      if (f.kind() == Formula::Kind::branch) {
        std::vector<Variable> out = f.prefix().universals();
        for (auto const& e : f.prefix().existentials()) {
          out.push_back(e.var);
        }
        return out;
      }
      return f.bound();
    }

    void collect_free(Formula const&      f,
                      std::multiset<Variable>& bound,
                      std::set<Variable>& out) {
      switch (f.kind()) {
        case Formula::Kind::equal:
          for (auto const* v : {&f.lhs_var(), &f.rhs_var()}) {
            if (bound.count(*v) == 0) {
              out.insert(*v);
            }
          }
          return;
        case Formula::Kind::truth:
        case Formula::Kind::falsity:
          return;
        case Formula::Kind::forall:
        case Formula::Kind::exists:
        case Formula::Kind::branch: {
          auto bs = binder_vars(f);
          for (auto const& v : bs) {
            bound.insert(v);
          }
          collect_free(f.body(), bound, out);
          for (auto const& v : bs) {
            bound.erase(bound.find(v));
          }
          return;
        }
        default:
          for (auto const& g : f.operands()) {
            collect_free(g, bound, out);
          }
      }
    }

    void check_name(Variable const& v, std::vector<Diagnostic>& out) {
      if (!is_legal_name(v.name())) {
        out.push_back(error("illegal variable name " + quoted(v)));
      }
    }

    void validate_rec(Formula const&           f,
                      std::multiset<Variable>& scope,
                      std::vector<Diagnostic>& out) {
      using K = Formula::Kind;
      switch (f.kind()) {
        case K::equal:
          check_name(f.lhs_var(), out);
          check_name(f.rhs_var(), out);
          return;
        case K::truth:
        case K::falsity:
          return;
        case K::conjunction:
        case K::disjunction:
          if (f.operands().size() < 2) {
            out.push_back(error(std::string(f.kind() == K::conjunction
                                                ? "conjunction"
                                                : "disjunction")
                                + " needs at least two operands"));
          }
          break;
        case K::forall:
        case K::exists: {
          if (f.bound().empty()) {
            out.push_back(error("quantifier binds no variables"));
          }
          std::set<Variable> here;
          for (auto const& v : f.bound()) {
            check_name(v, out);
            if (!here.insert(v).second) {
              out.push_back(error("quantifier binds " + quoted(v) + " twice"));
            }
          }
          break;
        }
        case K::branch: {
          auto inner = f.prefix().check();
          out.insert(out.end(), inner.begin(), inner.end());
          break;
        }
        default:
          break;
      }
      if (f.is_quantifier()) {
        auto bs = binder_vars(f);
        std::set<Variable> distinct(bs.begin(), bs.end());
        for (auto const& v : distinct) {
          if (scope.count(v) != 0) {
            out.push_back(warning(quoted(v) + " shadows an outer binding"));
          }
        }
        for (auto const& v : bs) {
          scope.insert(v);
        }
        validate_rec(f.body(), scope, out);
        for (auto const& v : bs) {
          scope.erase(scope.find(v));
        }
        return;
      }
      for (auto const& g : f.operands()) {
        validate_rec(g, scope, out);
      }
    }
  }  // namespace

  std::set<Variable> free_variables(Formula const& f) {
    std::multiset<Variable> bound;
    std::set<Variable>      out;
    collect_free(f, bound, out);
    return out;
  }

  bool is_sentence(Formula const& f) {
    return free_variables(f).empty();
  }

  std::vector<Diagnostic> validate(Formula const& f) {
    std::multiset<Variable> scope;
    std::vector<Diagnostic> out;
    validate_rec(f, scope, out);
    return out;
  }

}  // namespace henkin
