// Abstract syntax for first-order logic with Henkin (branched) quantifier
// prefixes over the empty vocabulary with equality.

#ifndef HENKIN_SYNTAX_HPP
#define HENKIN_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace henkin {

  // A variable token. Legal names start with an ASCII letter and continue
  // with letters, digits, '_' or '\''. Construction does not check legality;
  // `validate` does.
  class Variable {
   public:
    Variable() = default;
    explicit Variable(std::string name) : name_(std::move(name)) {}

    std::string const& name() const noexcept { return name_; }

    friend bool operator==(Variable const&, Variable const&) = default;
    friend auto operator<=>(Variable const&, Variable const&) = default;

   private:
    std::string name_;
  };

  bool is_legal_name(std::string_view name) noexcept;

  enum class Severity { warning, error };

  struct Diagnostic {
    Severity    severity;
    std::string message;

    friend bool operator==(Diagnostic const&, Diagnostic const&) = default;
  };

  bool has_errors(std::span<Diagnostic const> diags) noexcept;

  // Either a value or the diagnostics explaining why there is none.
  template <typename T>
  class Checked {
   public:
    Checked(T value) : value_(std::move(value)) {}
    Checked(std::vector<Diagnostic> diags) : diags_(std::move(diags)) {}

    bool ok() const noexcept { return value_.has_value(); }
    explicit operator bool() const noexcept { return ok(); }

    T const& value() const& { return value_.value(); }
    T&&      value() && { return std::move(value_).value(); }
    T const& operator*() const& { return value_.value(); }
    T const* operator->() const { return &value_.value(); }

    std::vector<Diagnostic> const& diagnostics() const noexcept {
      return diags_;
    }

   private:
    std::optional<T>        value_;
    std::vector<Diagnostic> diags_;
  };

  // One existential of a Henkin prefix together with the universals it may
  // observe, in declaration order.
  struct Existential {
    Variable              var;
    std::vector<Variable> deps;

    friend bool operator==(Existential const&, Existential const&) = default;
  };

  // The triple (A, E, D): universals, existentials, and the dependency
  // relation stored per existential. Use `mk_prefix` to obtain a validated
  // instance; the raw constructor is unchecked.
  class HenkinPrefix {
   public:
    HenkinPrefix() = default;
    HenkinPrefix(std::vector<Variable> universals,
                 std::vector<Existential> existentials)
        : universals_(std::move(universals)),
          existentials_(std::move(existentials)) {}

    std::vector<Variable> const& universals() const noexcept {
      return universals_;
    }
    std::vector<Existential> const& existentials() const noexcept {
      return existentials_;
    }

    // Invariant violations of this prefix, empty when well formed.
    std::vector<Diagnostic> check() const;

    friend bool operator==(HenkinPrefix const&, HenkinPrefix const&) = default;

   private:
    std::vector<Variable>    universals_;
    std::vector<Existential> existentials_;
  };

  using DependencyMap = std::map<Variable, std::vector<Variable>>;

  // Builds a prefix from (A, E, D). Every violated invariant is reported.
  Checked<HenkinPrefix> mk_prefix(std::vector<Variable> const& universals,
                                  std::vector<Variable> const& existentials,
                                  DependencyMap const&         deps);

  // H_n: rows forall x_i exists y_i, y_i depending on x_i alone.
  Checked<HenkinPrefix> build_Hn(std::size_t n);

  // E_n: universals x1, x2; y_1..y_n depend on x1, z_1..z_n on x2.
  Checked<HenkinPrefix> build_En(std::size_t n);

  class Formula {
   public:
    enum class Kind {
      equal,
      truth,
      falsity,
      negation,
      conjunction,
      disjunction,
      implication,
      equivalence,
      forall,
      exists,
      branch
    };

    static Formula equal(Variable lhs, Variable rhs);
    static Formula truth();
    static Formula falsity();
    static Formula negation(Formula f);
    static Formula conjunction(std::vector<Formula> fs);
    static Formula disjunction(std::vector<Formula> fs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula equivalence(Formula lhs, Formula rhs);
    static Formula forall(std::vector<Variable> vars, Formula body);
    static Formula exists(std::vector<Variable> vars, Formula body);
    static Formula branch(HenkinPrefix prefix, Formula body);

    Kind kind() const noexcept { return node_->kind; }

    // equal
    Variable const& lhs_var() const;
    Variable const& rhs_var() const;

    // negation, conjunction, disjunction, implication, equivalence, and the
    // body of binders (at index 0)
    std::span<Formula const> operands() const noexcept {
      return node_->children;
    }
    Formula const& operand(std::size_t i) const { return node_->children.at(i); }
    Formula const& body() const;

    // forall, exists
    std::vector<Variable> const& bound() const;

    // branch
    HenkinPrefix const& prefix() const;

    bool is_quantifier() const noexcept {
      return kind() == Kind::forall || kind() == Kind::exists
             || kind() == Kind::branch;
    }

    friend bool operator==(Formula const& a, Formula const& b);

   private:
    struct Node {
      Kind                  kind;
      Variable              lhs, rhs;
      std::vector<Formula>  children;
      std::vector<Variable> vars;
      HenkinPrefix          prefix;
    };

    explicit Formula(std::shared_ptr<Node const> n) : node_(std::move(n)) {}

    std::shared_ptr<Node const> node_;
  };

  // n-ary helpers that collapse the degenerate cases: an empty list becomes
  // `true` (resp. `false`) and a singleton becomes its element.
  Formula conjoin(std::vector<Formula> fs);
  Formula disjoin(std::vector<Formula> fs);

  Formula operator!(Formula f);
  Formula operator&&(Formula a, Formula b);
  Formula operator||(Formula a, Formula b);
  Formula eq(std::string_view a, std::string_view b);
  Formula neq(std::string_view a, std::string_view b);
  Formula implies(Formula a, Formula b);
  Formula iff(Formula a, Formula b);

  std::vector<Variable> vars(std::initializer_list<char const*> names);

  std::set<Variable> free_variables(Formula const& f);

  bool is_sentence(Formula const& f);

  std::vector<Diagnostic> validate(Formula const& f);

}  // namespace henkin

#endif  // HENKIN_SYNTAX_HPP
