#include "doctest.h"

#include <numeric>

#include "henkin/evaluator.hpp"
#include "henkin/fixtures.hpp"
#include "henkin/reducer.hpp"
#include "henkin/text.hpp"

using namespace henkin;
using eval::DomainSize;
using eval::evaluate;
using eval::evaluate_naive;
using text::parse_formula;

namespace {
  bool injective_nonsurjective_map_exists(std::uint32_t m) {
    std::vector<std::uint32_t> f(m, 0);
    while (true) {
      std::vector<bool> hit(m, false);
      bool              injective = true;
      for (auto v : f) {
        injective = injective && !hit[v];
        hit[v]    = true;
      }
      bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      if (injective && !surjective) {
        return true;
      }
      std::size_t i = m;
      while (i > 0 && ++f[i - 1] == m) {
        f[--i] = 0;
      }
      if (i == 0) {
        return false;
      }
    }
  }

  // Plugs the tables into the quantifier-free matrix at every universal
  // tuple.
  bool witness_satisfies(Formula const& branch,
                         std::vector<eval::SkolemTable> const& tables,
                         std::uint32_t m, eval::Valuation outer = {}) {
    auto const& p  = branch.prefix();
    auto const& us = p.universals();
    std::vector<std::uint32_t> tuple(us.size(), 0);
    while (true) {
      auto env = outer;
      for (std::size_t i = 0; i < us.size(); ++i) {
        env[us[i]] = tuple[i];
      }
      for (auto const& e : p.existentials()) {
        auto it = std::find_if(tables.begin(), tables.end(),
                               [&](auto const& t) { return t.owner == e.var; });
        if (it == tables.end()) {
          return false;
        }
        std::vector<std::uint32_t> args;
        for (auto const& d : e.deps) {
          args.push_back(env.at(d));
        }
        env[e.var] = (*it)(args, m);
      }
      if (!evaluate(branch.body(), DomainSize(m), env).value) {
        return false;
      }
      std::size_t i = us.size();
      while (i > 0 && ++tuple[i - 1] == m) {
        tuple[--i] = 0;
      }
      if (i == 0) {
        return true;
      }
    }
  }
}  // namespace

TEST_SUITE("evaluator") {
  TEST_CASE("domain size") {
    CHECK_THROWS_AS(DomainSize(0), std::invalid_argument);
    CHECK(DomainSize(3).value() == 3);
  }

  TEST_CASE("finiteness sentence against a direct count") {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      bool expected = !injective_nonsurjective_map_exists(m);
      CHECK(evaluate(fixtures::ehrenfeucht_finiteness(), DomainSize(m)).value
            == expected);
      CHECK(evaluate(fixtures::infinity_sentence(), DomainSize(m)).value
            == !expected);
    }
  }

  TEST_CASE("identity tables witness") {
    auto f = parse_formula("H{ forall x z ; y(x), w(z) } . y = x & w = z");
    for (std::uint32_t m = 1; m <= 4; ++m) {
      auto r = evaluate(f, DomainSize(m));
      REQUIRE(r.value);
      CHECK(r.witness.size() == 2);
      CHECK(witness_satisfies(f, r.witness, m));
      for (auto const& t : r.witness) {
        CHECK(t.arity == 1);
        CHECK(t.entries.size() == m);
        for (std::uint32_t i = 0; i < m; ++i) {
          CHECK(t.entries[i] == i);
        }
      }
    }
  }

  TEST_CASE("one element forces y = x") {
    auto f = parse_formula("H{ forall x z ; y(x), w(z) } . ~(y = x)");
    CHECK_FALSE(evaluate(f, DomainSize(1)).value);
    CHECK_FALSE(evaluate_naive(f, DomainSize(1)).value);
    CHECK(evaluate(f, DomainSize(2)).value);
  }

  TEST_CASE("constants and full dependencies") {
    CHECK(evaluate_naive(parse_formula("exists t . t = t"), DomainSize(1)).value);
    auto branch = parse_formula(
        "H{ forall x1 x2 ; y1(x1 x2), y2(x1 x2) } . y1 = x2 & y2 = x1");
    auto fo = parse_formula("forall x1 x2 . exists y1 y2 . y1 = x2 & y2 = x1");
    CHECK(evaluate_naive(branch, DomainSize(2)).value);
    CHECK(evaluate(branch, DomainSize(2)).value);
    CHECK(evaluate(fo, DomainSize(2)).value);
    auto indep = parse_formula(
        "H{ forall x1 x2 ; y1(x1), y2(x2) } . y1 = x2 & y2 = x1");
    CHECK_FALSE(evaluate(indep, DomainSize(2)).value);
    CHECK_FALSE(evaluate_naive(indep, DomainSize(2)).value);

    auto constant = parse_formula("H{ forall x ; y() } . y = x");
    CHECK(evaluate(constant, DomainSize(1)).value);
    CHECK_FALSE(evaluate(constant, DomainSize(2)).value);
  }

  TEST_CASE("free variables come from the environment") {
    auto f = parse_formula("H{ forall x ; y(x) } . (x = t -> y != t)");
    CHECK(evaluate(f, DomainSize(2), {{Variable("t"), 1}}).value);
    CHECK_FALSE(evaluate(f, DomainSize(1), {{Variable("t"), 0}}).value);
    CHECK_THROWS_AS(evaluate(f, DomainSize(2)), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(f, DomainSize(2), {{Variable("t"), 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate(eq("a b", "a"), DomainSize(1), {}),
                    std::invalid_argument);
  }

  TEST_CASE("witness respects outer values") {
    auto inner = parse_formula("H{ forall x ; y(x) } . y != t & (x = t -> y = s)");
    eval::Valuation env{{Variable("t"), 0}, {Variable("s"), 2}};
    auto r = evaluate(inner, DomainSize(3), env);
    REQUIRE(r.value);
    CHECK(witness_satisfies(inner, r.witness, 3, env));
  }

  TEST_CASE("witness format") {
    eval::SkolemTable t{Variable("y1"), 2, {0, 1, 1, 0}};
    CHECK(t(std::vector<std::uint32_t>{1, 0}, 2) == 1);
    CHECK(t(std::vector<std::uint32_t>{1, 1}, 2) == 0);
    eval::SkolemTable c{Variable("k"), 0, {1}};
    std::vector<eval::SkolemTable> ts{t, c};
    CHECK(eval::format_witness(ts, 2)
          == "y1: (0,0)->0 (0,1)->1 (1,0)->1 (1,1)->0\nk: ()->1\n");
  }

  TEST_CASE("deterministic witness") {
    auto f = fixtures::ceitin_e10();
    auto a = evaluate(f, DomainSize(2));
    auto b = evaluate(f, DomainSize(2));
    REQUIRE(a.value);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
    CHECK(witness_satisfies(f, a.witness, 2));
  }

  TEST_CASE("find_min_model") {
    CHECK(eval::find_min_model(parse_formula("exists t . t = t"), 3)
          == DomainSize(1));
    CHECK_FALSE(eval::find_min_model(fixtures::infinity_sentence(), 5));
    Presentation E({{Word("aa"), Word("a")}, {Word("bb"), Word("b")}});
    auto         f = reduce::compile(E, {Word("ab"), Word("ba")});
    CHECK(eval::find_min_model(f, 3) == DomainSize(2));
    CHECK(eval::find_min_model(parse_formula("exists a b . a != b"), 4)
          == DomainSize(2));
    CHECK_THROWS_AS(eval::find_min_model(eq("a", "a"), 2),
                    std::invalid_argument);
  }

  TEST_CASE("budget is a third outcome") {
    auto f = fixtures::ehrenfeucht_finiteness();
    CHECK_THROWS_AS(evaluate(f, DomainSize(4), {}, {10}),
                    eval::ResourceLimitExceeded);
    CHECK_THROWS_AS(evaluate_naive(f, DomainSize(4), {}, {10}),
                    eval::ResourceLimitExceeded);
    try {
      eval::find_min_model(fixtures::infinity_sentence(), 5, {50});
      FAIL("no limit hit");
    } catch (eval::ResourceLimitExceeded const& e) {
      REQUIRE(e.size());
      CHECK(*e.size() >= 1);
      CHECK(e.nodes() > 50);
    }
  }

  TEST_CASE("Henkin search is limited to 64 elements") {
    auto f = parse_formula("H{ forall x ; y(x) } . y = x");
    CHECK(evaluate(f, DomainSize(64)).value);
    CHECK_THROWS_AS(evaluate(f, DomainSize(65)), eval::ResourceLimitExceeded);
    CHECK(evaluate(parse_formula("forall x . exists y . y = x"), DomainSize(100))
              .value);
  }
}
