#include "doctest.h"

#include "commands.hpp"
#include "corpus.hpp"
#include "henkin/evaluator.hpp"
#include "henkin/fixtures.hpp"
#include "henkin/oracle.hpp"
#include "henkin/reducer.hpp"
#include "henkin/text.hpp"

using namespace henkin;
using namespace henkin::testing;
using eval::DomainSize;
using eval::evaluate;

namespace {
  std::optional<bool> naive_or_skip(Formula const& f, std::uint32_t m) {
    try {
      return eval::evaluate_naive(f, DomainSize(m), {}, {200'000}).value;
    } catch (eval::ResourceLimitExceeded const&) {
      return std::nullopt;
    }
  }

  // Matrix over x1..xn, y1..yn.
  Formula collapse_matrix(Rng& rng, std::size_t n) {
    auto vs = xs(n);
    auto y  = ys(n);
    vs.insert(vs.end(), y.begin(), y.end());
    return random_matrix(rng, vs, 3);
  }

  Formula with_prefix(Formula const& branch, HenkinPrefix p) {
    return Formula::branch(std::move(p), branch.body());
  }

  // Strips any outer first-order quantifiers and negation.
  Formula const& core_branch(Formula const& f) {
    if (f.kind() == Formula::Kind::branch) {
      return f;
    }
    if (f.kind() == Formula::Kind::negation) {
      return core_branch(f.operand(0));
    }
    return core_branch(f.body());
  }

  // Rebuilds `f` with its Branch node replaced.
  Formula replace_branch(Formula const& f, Formula const& branch) {
    switch (f.kind()) {
      case Formula::Kind::branch:
        return branch;
      case Formula::Kind::negation:
        return Formula::negation(replace_branch(f.operand(0), branch));
      case Formula::Kind::forall:
        return Formula::forall(f.bound(), replace_branch(f.body(), branch));
      default:
        return Formula::exists(f.bound(), replace_branch(f.body(), branch));
    }
  }

  bool positive(Formula const& f) {
    if (f.kind() == Formula::Kind::negation) {
      return false;
    }
    return f.kind() == Formula::Kind::branch || positive(f.body());
  }
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("engines agree on random Branch formulas") {
    Rng rng(11);
    int compared = 0;
    for (int i = 0; i < 80; ++i) {
      auto f = random_branch(rng, 3, 3);
      for (std::uint32_t m = 1; m <= 3; ++m) {
        auto naive = naive_or_skip(f, m);
        if (!naive) {
          continue;
        }
        ++compared;
        CHECK_MESSAGE(evaluate(f, DomainSize(m)).value == *naive,
                      text::print_formula(f) << " at m=" << m);
      }
    }
    CHECK(compared >= 160);
  }

  TEST_CASE("row permutation invariance") {
    Rng rng(12);
    for (int i = 0; i < 60; ++i) {
      auto f  = random_branch(rng, 3, 3);
      auto const& b = core_branch(f);
      auto us = b.prefix().universals();
      auto es = b.prefix().existentials();
      rng.shuffle(us);
      rng.shuffle(es);
      auto g = replace_branch(f, with_prefix(b, HenkinPrefix(us, es)));
      for (std::uint32_t m = 1; m <= 3; ++m) {
        CHECK(evaluate(f, DomainSize(m)).value == evaluate(g, DomainSize(m)).value);
      }
    }
  }

  TEST_CASE("alpha renaming invariance") {
    Rng rng(13);
    std::vector<Formula> fs;
    for (auto const& nf : formula_corpus()) {
      fs.push_back(nf.formula);
    }
    for (int i = 0; i < 30; ++i) {
      fs.push_back(random_branch(rng, 3, 3));
    }
    for (auto const& f : fs) {
      auto g = alpha_rename(f, "v");
      CHECK(validate(g).empty() == validate(f).empty());
      for (std::uint32_t m = 1; m <= 2; ++m) {
        CHECK(evaluate(f, DomainSize(m)).value == evaluate(g, DomainSize(m)).value);
      }
    }
  }

  TEST_CASE("dependency monotonicity") {
    Rng rng(14);
    int widened = 0;
    for (int i = 0; i < 80; ++i) {
      auto f = random_branch(rng, 3, 3);
      if (!positive(f)) {
        continue;
      }
      auto const&              b = core_branch(f);
      std::vector<Existential> es;
      for (auto e : b.prefix().existentials()) {
        for (auto const& u : b.prefix().universals()) {
          if (std::find(e.deps.begin(), e.deps.end(), u) == e.deps.end()
              && rng.coin()) {
            e.deps.push_back(u);
          }
        }
        es.push_back(std::move(e));
      }
      auto g = replace_branch(
          f, with_prefix(b, HenkinPrefix(b.prefix().universals(), es)));
      for (std::uint32_t m = 1; m <= 3; ++m) {
        if (evaluate(f, DomainSize(m)).value) {
          ++widened;
          CHECK(evaluate(g, DomainSize(m)).value);
        }
      }
    }
    CHECK(widened > 20);
  }

  TEST_CASE("full dependencies collapse to first order") {
    Rng rng(15);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + rng.pick(3);
      auto matrix   = collapse_matrix(rng, n);
      auto branch   = Formula::branch(full_prefix(n), matrix);
      auto fo       = forall_exists(n, matrix);
      for (std::uint32_t m = 1; m <= 3; ++m) {
        CHECK(evaluate(branch, DomainSize(m)).value
              == evaluate(fo, DomainSize(m)).value);
      }
    }
  }

  TEST_CASE("triangular dependencies collapse to alternation") {
    Rng rng(16);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + rng.pick(3);
      auto matrix   = collapse_matrix(rng, n);
      auto branch   = Formula::branch(triangular_prefix(n), matrix);
      auto fo       = alternating(n, matrix);
      for (std::uint32_t m = 1; m <= 3; ++m) {
        CHECK(evaluate(branch, DomainSize(m)).value
              == evaluate(fo, DomainSize(m)).value);
      }
    }
  }

  TEST_CASE("reduction soundness on the word corpus") {
    for (auto const& w : word_corpus()) {
      auto rows = cli::crosscheck(w.E, w.q, 3, default_budget);
      for (auto const& r : rows) {
        CHECK_MESSAGE(r.agree(), w.name << " at m=" << r.size);
      }
      if (w.pinned) {
        std::optional<std::uint32_t> first;
        for (auto const& r : rows) {
          if (r.witness_found && !first) {
            first = r.size;
          }
        }
        CHECK_MESSAGE(first == w.min_model, w.name);
      }
    }
  }

  TEST_CASE("reduction soundness on random small instances") {
    Rng  rng(17);
    auto word = [&](std::size_t len) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) {
        s += static_cast<char>('a' + rng.pick(2));
      }
      return Word(s);
    };
    for (int i = 0; i < 12; ++i) {
      std::vector<Equation> eqs;
      std::size_t           budget = 4;
      while (budget >= 2 && rng.coin()) {
        std::size_t l = 1 + rng.pick(budget - 1);
        std::size_t r = 1 + rng.pick(budget - l);
        eqs.push_back({word(l), word(r)});
        budget -= l + r;
      }
      Presentation E(std::move(eqs));
      std::size_t  lq = 1 + rng.pick(2);
      Equation     q{word(lq), word(1 + rng.pick(3 - lq + 1))};
      for (auto const& r : cli::crosscheck(E, q, 3, default_budget)) {
        CHECK_MESSAGE(r.agree(), to_string(E) << "query " << to_string(q)
                                              << " m=" << r.size);
      }
    }
  }

  TEST_CASE("reduction soundness on the five-generator presentation") {
    auto C = fixtures::ceitin_presentation();
    for (auto const& [v, w] : {std::pair{"a", "b"}, {"ac", "ca"}, {"cca", "ccae"},
                               {"ab", "ba"}, {"ce", "ec"}, {"eca", "ce"},
                               {"cc", "c"}}) {
      for (auto const& r : cli::crosscheck(C, equation(v, w), 3, default_budget)) {
        CHECK_MESSAGE(r.agree(), v << " = " << w << " m=" << r.size);
      }
    }
  }

  TEST_CASE("equal query words never separate") {
    for (auto const& w : word_corpus()) {
      Equation q{w.q.lhs, w.q.lhs};
      for (std::uint32_t m = 1; m <= 2; ++m) {
        CHECK_FALSE(evaluate(reduce::compile(w.E, q), DomainSize(m)).value);
      }
    }
  }

  TEST_CASE("equation order does not matter") {
    for (auto const& w : word_corpus()) {
      auto eqs = w.E.equations();
      if (eqs.size() < 2) {
        continue;
      }
      std::reverse(eqs.begin(), eqs.end());
      Presentation P(eqs);
      for (std::uint32_t m = 1; m <= 3; ++m) {
        CHECK(evaluate(reduce::compile(w.E, w.q), DomainSize(m)).value
              == evaluate(reduce::compile(P, w.q), DomainSize(m)).value);
        CHECK(oracle::find_witness(w.E, w.q, m).has_value()
              == oracle::find_witness(P, w.q, m).has_value());
      }
    }
  }

  TEST_CASE("compiled prefixes have one dependency per row") {
    for (auto const& w : word_corpus()) {
      auto f    = reduce::compile(w.E, w.q);
      auto plan = reduce::plan_rows(w.E, w.q);
      auto const& b = f.body();
      CHECK(b.prefix().existentials().size() == plan.size());
      for (auto const& e : b.prefix().existentials()) {
        CHECK(e.deps.size() == 1);
      }
      CHECK(validate(f).empty());
      CHECK(is_sentence(f));
    }
  }

  TEST_CASE("oracle witnesses check and repeat") {
    for (auto const& w : word_corpus()) {
      for (std::uint32_t m = 1; m <= 3; ++m) {
        auto a = oracle::find_witness(w.E, w.q, m);
        auto b = oracle::find_witness(w.E, w.q, m);
        CHECK(a == b);
        if (a) {
          CHECK(oracle::check_witness(w.E, w.q, *a));
        }
      }
    }
  }

  TEST_CASE("tr_apply is a homomorphism") {
    Rng rng(20);
    for (int i = 0; i < 200; ++i) {
      std::uint32_t         m = 1 + static_cast<std::uint32_t>(rng.pick(4));
      oracle::FunctionTable t(m);
      for (char c : {'a', 'b', 'c'}) {
        std::vector<oracle::Element> f(m);
        for (auto& v : f) {
          v = static_cast<oracle::Element>(rng.pick(m));
        }
        t.set(Letter{c}, f);
      }
      auto word = [&] {
        std::string s;
        for (std::size_t k = 0, n = 1 + rng.pick(4); k < n; ++k) {
          s += static_cast<char>('a' + rng.pick(3));
        }
        return Word(s);
      };
      auto u = word(), v = word();
      auto p = static_cast<oracle::Element>(rng.pick(m));
      CHECK(oracle::tr_apply(u + v, p, t)
            == oracle::tr_apply(u, oracle::tr_apply(v, p, t), t));
    }
  }

  TEST_CASE("evaluation is deterministic") {
    Rng rng(21);
    for (int i = 0; i < 30; ++i) {
      auto f = random_branch(rng, 3, 3);
      for (std::uint32_t m = 1; m <= 3; ++m) {
        auto a = evaluate(f, DomainSize(m));
        auto b = evaluate(f, DomainSize(m));
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(a.nodes == b.nodes);
      }
    }
  }

  TEST_CASE("print then parse is the identity") {
    Rng rng(22);
    std::vector<Formula> fs;
    for (auto const& nf : formula_corpus()) {
      fs.push_back(nf.formula);
      fs.push_back(alpha_rename(nf.formula, "k"));
    }
    for (int i = 0; i < 200; ++i) {
      auto f = random_branch(rng, 3, 3);
      fs.push_back(f);
      fs.push_back(Formula::forall(vars({"p"}), random_matrix(rng, vars({"p", "q", "r"}), 4)));
    }
    for (auto const& f : fs) {
      auto text = text::print_formula(f);
      auto back = text::parse_formula(text);
      CHECK_MESSAGE(back == f, text);
      CHECK(text::print_formula(back) == text);
    }
  }

  TEST_CASE("every parse error points inside the input") {
    Rng        rng(23);
    std::string const alphabet = "xyz=&|~-><(){};,.!H forall exists# \n";
    auto       corpus = formula_corpus();
    int        errors = 0;
    for (int i = 0; i < 400; ++i) {
      auto text = text::print_formula(rng.choose(corpus).formula);
      for (std::size_t k = 0, n = 1 + rng.pick(3); k < n; ++k) {
        auto pos = rng.pick(text.size());
        switch (rng.pick(3)) {
          case 0:
            text.erase(pos, 1);
            break;
          case 1:
            text.insert(pos, 1, alphabet[rng.pick(alphabet.size())]);
            break;
          default:
            text[pos] = alphabet[rng.pick(alphabet.size())];
        }
      }
      try {
        text::parse_formula(text);
      } catch (text::ParseError const& e) {
        ++errors;
        auto const span = e.span();
        std::size_t line = 1, col = 1;
        bool        inside = false;
        for (std::size_t k = 0; k <= text.size(); ++k) {
          if (line == span.line && col == span.column) {
            inside = true;
            break;
          }
          if (k < text.size() && text[k] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
        CHECK_MESSAGE(inside, text << " @" << span.line << ":" << span.column);
      }
    }
    CHECK(errors > 100);
  }

  TEST_CASE("mk_prefix is total") {
    Rng rng(24);
    std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < 500; ++i) {
      std::vector<Variable> us, es;
      for (std::size_t k = 0, n = rng.pick(4); k < n; ++k) {
        us.emplace_back(rng.choose(pool));
      }
      for (std::size_t k = 0, n = rng.pick(4); k < n; ++k) {
        es.emplace_back(rng.choose(pool));
      }
      DependencyMap deps;
      for (std::size_t k = 0, n = rng.pick(5); k < n; ++k) {
        auto& list = deps[Variable(rng.choose(pool))];
        for (std::size_t j = 0, d = rng.pick(3); j < d; ++j) {
          list.emplace_back(rng.choose(pool));
        }
      }
      auto p = mk_prefix(us, es, deps);
      if (p.ok()) {
        CHECK(p->check().empty());
        CHECK(p.diagnostics().empty());
      } else {
        CHECK_FALSE(p.diagnostics().empty());
      }
    }
  }
}
