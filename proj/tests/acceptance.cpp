// Acceptance suite: one PASS/FAIL line per criterion, each with its
// runtime bound. Exits nonzero if any line fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "corpus.hpp"
#include "henkin/evaluator.hpp"
#include "henkin/fixtures.hpp"
#include "henkin/reducer.hpp"
#include "henkin/text.hpp"

using namespace henkin;
using namespace henkin::testing;
using eval::DomainSize;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      if (pass) {
        detail.clear();
      }
      pass = false;
      if (!detail.empty()) {
        detail += "; ";
      }
      detail += why;
    }
  };

  struct Criterion {
    std::string              name;
    double                   limit_seconds;
    std::function<Outcome()> check;
  };

  // Everything built along the way, for the round-trip line.
  std::vector<Formula> constructed;

  Formula keep(Formula f) {
    constructed.push_back(f);
    return f;
  }

  struct Cmd {
    int         code;
    std::string out;
  };

  Cmd henkin_cmd(std::vector<std::string> const& args, std::string const& in = "") {
    std::istringstream input(in);
    std::ostringstream out, err;
    int                code = cli::run(args, input, out, err);
    return {code, out.str() + err.str()};
  }

  Outcome quantifier_sizes() {
    Outcome o;
    auto h12 = keep(text::parse_formula(henkin_cmd({"fixture", "ceitin-h12"}).out));
    auto const& hp = h12.prefix();
    bool rows = hp.universals().size() == 12 && hp.existentials().size() == 12;
    for (std::size_t i = 0; rows && i < 12; ++i) {
      rows = hp.existentials()[i].deps == std::vector{hp.universals()[i]};
    }
    if (!rows) {
      o.fail("H-form is not 12 one-to-one rows");
    }

    auto e10 = keep(text::parse_formula(henkin_cmd({"fixture", "ceitin-e10"}).out));
    auto const& ep = e10.prefix();
    std::size_t first = 0, second = 0, other = 0;
    for (auto const& e : ep.existentials()) {
      if (e.deps == vars({"x1"})) {
        ++first;
      } else if (e.deps == vars({"x2"})) {
        ++second;
      } else {
        ++other;
      }
    }
    if (ep.universals() != vars({"x1", "x2"}) || first != 10 || second != 8
        || other != 0) {
      o.fail("E-form prefix is " + std::to_string(first) + "+"
             + std::to_string(second));
    }
    if (o.pass) {
      o.detail = "12 rows; 10+8 over x1, x2";
    }
    return o;
  }

  Outcome finiteness() {
    Outcome o;
    auto    fin = keep(fixtures::ehrenfeucht_finiteness());
    auto    inf = keep(fixtures::infinity_sentence());
    for (std::uint32_t m = 1; m <= 4; ++m) {
      DomainSize d(m);
      if (!eval::evaluate(fin, d).value || eval::evaluate(inf, d).value) {
        o.fail("backtracking engine wrong at m=" + std::to_string(m));
      }
      if (!eval::evaluate_naive(fin, d).value
          || eval::evaluate_naive(inf, d).value) {
        o.fail("naive engine wrong at m=" + std::to_string(m));
      }
    }
    if (o.pass) {
      o.detail = "m=1..4, both engines";
    }
    return o;
  }

  Outcome engine_agreement() {
    Outcome     o;
    auto        corpus   = formula_corpus();
    std::size_t compared = 0;
    std::vector<std::string> skipped;
    for (auto const& nf : corpus) {
      keep(nf.formula);
      for (std::uint32_t m = 1; m <= 3; ++m) {
        bool naive;
        try {
          naive = eval::evaluate_naive(nf.formula, DomainSize(m)).value;
        } catch (eval::ResourceLimitExceeded const&) {
          if (m <= 2) {
            o.fail("naive out of budget on '" + nf.name + "' at m="
                   + std::to_string(m));
          }
          skipped.push_back(nf.name + "@" + std::to_string(m));
          continue;
        }
        ++compared;
        if (eval::evaluate(nf.formula, DomainSize(m)).value != naive) {
          o.fail("disagree on '" + nf.name + "' at m=" + std::to_string(m));
        }
      }
    }
    if (corpus.size() < 30) {
      o.fail("corpus has only " + std::to_string(corpus.size()) + " formulas");
    }
    if (o.pass) {
      o.detail = std::to_string(corpus.size()) + " formulas, "
                 + std::to_string(compared) + " (formula, m) pairs; "
                 + std::to_string(skipped.size()) + " m=3 pairs over budget";
      for (auto const& s : skipped) {
        o.detail += (&s == &skipped.front() ? ": " : ", ") + s;
      }
    }
    return o;
  }

  Outcome collapse_laws() {
    Outcome o;
    Rng     rng(4242);
    for (int i = 0; i < 20; ++i) {
      std::size_t n  = 1 + static_cast<std::size_t>(i % 3);
      auto        vs = xs(n);
      auto        y  = ys(n);
      vs.insert(vs.end(), y.begin(), y.end());
      auto matrix = random_matrix(rng, vs, 3);
      auto full   = keep(Formula::branch(full_prefix(n), matrix));
      auto tri    = keep(Formula::branch(triangular_prefix(n), matrix));
      auto fo     = keep(forall_exists(n, matrix));
      auto alt    = keep(alternating(n, matrix));
      for (std::uint32_t m = 1; m <= 3; ++m) {
        DomainSize d(m);
        if (eval::evaluate(full, d).value != eval::evaluate(fo, d).value) {
          o.fail("full collapse fails for matrix " + std::to_string(i)
                 + " at m=" + std::to_string(m));
        }
        if (eval::evaluate(tri, d).value != eval::evaluate(alt, d).value) {
          o.fail("triangular collapse fails for matrix " + std::to_string(i)
                 + " at m=" + std::to_string(m));
        }
      }
    }
    if (o.pass) {
      o.detail = "20 matrices, n<=3, m<=3, full and triangular";
    }
    return o;
  }

  Outcome reduction_soundness() {
    Outcome o;
    auto    corpus = word_corpus();
    double  slowest = 0;
    for (auto const& w : corpus) {
      std::size_t eq_len = 0;
      for (auto const& e : w.E.equations()) {
        eq_len += e.length();
      }
      if (eq_len > 6 || w.q.length() > 6) {
        o.fail(w.name + " exceeds the size bounds");
      }
      keep(reduce::compile(w.E, w.q));

      auto start = std::chrono::steady_clock::now();
      auto r     = henkin_cmd({"crosscheck", "-p", "-", "-q", to_string(w.q),
                               "--max-size", "3"},
                              to_string(w.E));
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      slowest = std::max(slowest, secs);
      if (r.code != 0) {
        o.fail(w.name + " exits " + std::to_string(r.code));
        continue;
      }
      if (secs > 60) {
        o.fail(w.name + " took " + std::to_string(secs) + "s");
      }
      if (w.pinned) {
        std::optional<std::uint32_t> first;
        std::istringstream           rows(r.out);
        std::string                  line;
        std::getline(rows, line);
        while (std::getline(rows, line)) {
          std::istringstream cols(line);
          std::uint32_t      m;
          std::string        truth;
          cols >> m >> truth;
          if (truth == "true" && !first) {
            first = m;
          }
        }
        if (first != w.min_model) {
          o.fail(w.name + " has least model "
                 + (first ? std::to_string(*first) : "none"));
        }
      }
    }
    if (corpus.size() < 10) {
      o.fail("corpus has only " + std::to_string(corpus.size()) + " instances");
    }
    if (o.pass) {
      std::ostringstream d;
      d << corpus.size() << " instances at M=3, slowest " << std::fixed
        << std::setprecision(2) << slowest << "s";
      o.detail = d.str();
    }
    return o;
  }

  Outcome ceitin_satisfiable() {
    Outcome o;
    auto    h12 = keep(fixtures::ceitin_h12());
    auto    e10 = keep(fixtures::ceitin_e10());
    for (std::uint32_t m = 1; m <= 2; ++m) {
      if (!eval::evaluate(h12, DomainSize(m)).value) {
        o.fail("H-form false at m=" + std::to_string(m));
      }
      if (!eval::evaluate(e10, DomainSize(m)).value) {
        o.fail("E-form false at m=" + std::to_string(m));
      }
    }
    keep(fixtures::ceitin_h12_with_query({Word("a"), Word("a")}));
    if (o.pass) {
      o.detail = "both forms true at m=1,2";
    }
    return o;
  }

  Outcome round_trip() {
    Outcome o;
    for (auto const& f : constructed) {
      auto printed = text::print_formula(f);
      try {
        if (!(text::parse_formula(printed) == f)) {
          o.fail("changed: " + printed.substr(0, 60));
        }
      } catch (text::ParseError const& e) {
        o.fail(std::string("unparsable: ") + e.what());
      }
    }
    if (o.pass) {
      o.detail = std::to_string(constructed.size()) + " formulas";
    }
    return o;
  }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"quantifier-size constants", 1, quantifier_sizes},
      {"finiteness sentence", 30, finiteness},
      {"engine agreement", 300, engine_agreement},
      {"collapse laws", 120, collapse_laws},
      {"reduction soundness", 13 * 60, reduction_soundness},
      {"Ceitin satisfiability", 120, ceitin_satisfiable},
      {"round trip", 60, round_trip},
  };

  bool all = true;
  for (auto const& c : criteria) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (secs > c.limit_seconds) {
      o.fail("over the " + std::to_string(static_cast<int>(c.limit_seconds))
             + "s bound");
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(28)
              << c.name << std::right << std::fixed << std::setprecision(2)
              << std::setw(8) << secs << "s  " << o.detail << '\n';
  }
  return all ? 0 : 1;
}
