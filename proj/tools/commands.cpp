#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "henkin/evaluator.hpp"
#include "henkin/fixtures.hpp"
#include "henkin/oracle.hpp"
#include "henkin/text.hpp"

namespace henkin::cli {

  namespace {

    // Input failures that map to the usage-error exit code.
    struct InputError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    std::string slurp(std::string const& path, std::istream& in) {
      if (path == "-") {
        return {std::istreambuf_iterator<char>(in), {}};
      }
      std::ifstream file(path, std::ios::binary);
      if (!file) {
        throw InputError("cannot open '" + path + "'");
      }
      return {std::istreambuf_iterator<char>(file), {}};
    }

    struct FormulaSource {
      std::string file;
      std::string expr;

      void attach(CLI::App* app) {
        app->add_option("file", file, "Formula file ('-' for stdin)");
        app->add_option("--expr,-e", expr, "Inline formula text");
      }

      Formula load(std::istream& in) const {
        if (file.empty() == expr.empty()) {
          throw InputError("give exactly one of FILE or --expr");
        }
        auto text = expr.empty() ? slurp(file, in) : expr;
        auto f    = text::parse_formula(text);
        auto diag = validate(f);
        if (has_errors(diag)) {
          throw InputError("invalid formula: " + diag.front().message);
        }
        auto free = free_variables(f);
        if (!free.empty()) {
          throw InputError("not a sentence: '" + free.begin()->name()
                           + "' is free");
        }
        return f;
      }
    };

    struct Instance {
      std::string presentation;
      std::string query;

      void attach(CLI::App* app) {
        app->add_option("--presentation,-p", presentation,
                        "Presentation file, one 'word = word' per line")
            ->required();
        app->add_option("--query,-q", query, "Query equation 'v = w'")
            ->required();
      }

      std::pair<Presentation, Equation> load(std::istream& in) const {
        return {text::parse_presentation(slurp(presentation, in)),
                text::parse_equation(query)};
      }
    };

    int cmd_eval(FormulaSource const& src, std::uint32_t size, bool naive,
                 bool show_witness, std::uint64_t budget, std::istream& in,
                 std::ostream& out) {
      auto f = src.load(in);
      eval::DomainSize m(size);
      auto r = naive ? eval::evaluate_naive(f, m, {}, {budget})
                     : eval::evaluate(f, m, {}, {budget});
      out << (r.value ? "true" : "false") << '\n';
      if (r.value && show_witness) {
        out << eval::format_witness(r.witness, size);
      }
      return r.value ? ok : negative;
    }

    int cmd_sat(FormulaSource const& src, std::uint32_t max_size,
                std::uint64_t budget, std::istream& in, std::ostream& out) {
      auto f = src.load(in);
      auto m = eval::find_min_model(f, max_size, {budget});
      if (m) {
        out << m->value() << '\n';
        return ok;
      }
      out << "none up to " << max_size << '\n';
      return negative;
    }

    int cmd_compile(Instance const& inst, bool corrupt, std::istream& in,
                    std::ostream& out) {
      auto [E, q] = inst.load(in);
      auto plan   = reduce::plan_rows(E, q);
      auto f      = reduce::compile(E, q,
                                    corrupt ? reduce::Mutation::drop_disequality
                                                 : reduce::Mutation::none);
      out << "# rows: " << plan.size() << '\n';
      out << "# query: " << to_string(q) << '\n';
      out << text::print_formula(f) << '\n';
      return ok;
    }

    int cmd_oracle(Instance const& inst, std::uint32_t size,
                   std::uint64_t budget, std::istream& in, std::ostream& out) {
      auto [E, q] = inst.load(in);
      auto w      = oracle::find_witness(E, q, size, {budget});
      if (!w) {
        out << "none\n";
        return negative;
      }
      out << oracle::format_witness(*w);
      return ok;
    }

    int cmd_crosscheck(Instance const& inst, std::uint32_t max_size,
                       std::uint64_t budget, bool corrupt, std::istream& in,
                       std::ostream& out) {
      auto [E, q] = inst.load(in);
      auto rows   = crosscheck(E, q, max_size, budget,
                               corrupt ? reduce::Mutation::drop_disequality
                                         : reduce::Mutation::none);
      bool all = true;
      out << "size  formula  oracle  status\n";
      for (auto const& r : rows) {
        all = all && r.agree();
        out << std::left << std::setw(6) << r.size << std::setw(9)
            << (r.formula_true ? "true" : "false") << std::setw(8)
            << (r.witness_found ? "found" : "none")
            << (r.agree() ? "agree" : "MISMATCH") << '\n';
      }
      return all ? ok : mismatch;
    }

    int cmd_fixture(std::string const& name, std::ostream& out) {
      if (name == "ceitin-presentation") {
        out << to_string(fixtures::ceitin_presentation());
        return ok;
      }
      std::optional<Formula> f;
      if (name == "ceitin-h12") {
        f = fixtures::ceitin_h12();
      } else if (name == "ceitin-e10") {
        f = fixtures::ceitin_e10();
      } else if (name == "ehrenfeucht") {
        f = fixtures::ehrenfeucht_finiteness();
      } else if (name == "infinity") {
        f = fixtures::infinity_sentence();
      }
      out << text::print_formula(*f) << '\n';
      return ok;
    }

  }  // namespace

  std::vector<CrosscheckRow> crosscheck(Presentation const& E,
                                        Equation const&     q,
                                        std::uint32_t       max_size,
                                        std::uint64_t       budget,
                                        reduce::Mutation    mutation) {
    auto const                 f = reduce::compile(E, q, mutation);
    std::vector<CrosscheckRow> rows;
    for (std::uint32_t m = 1; m <= max_size; ++m) {
      bool truth = eval::evaluate(f, eval::DomainSize(m), {}, {budget}).value;
      bool found = oracle::find_witness(E, q, m, {budget}).has_value();
      rows.push_back({m, truth, found});
    }
    return rows;
  }

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Henkin quantifiers over the empty vocabulary", "henkin"};
    app.require_subcommand(1);

    std::uint64_t budget = default_budget;
    app.add_option("--budget", budget, "Search node budget")
        ->capture_default_str();

    FormulaSource eval_src;
    std::uint32_t eval_size = 0;
    bool          naive = false, show_witness = false;
    auto*         eval_cmd = app.add_subcommand("eval", "Evaluate a sentence");
    eval_src.attach(eval_cmd);
    eval_cmd->add_option("--size,-m", eval_size, "Domain size")
        ->required()
        ->check(CLI::PositiveNumber);
    eval_cmd->add_flag("--naive", naive, "Use the exhaustive engine");
    eval_cmd->add_flag("--show-witness", show_witness,
                       "Print Skolem tables when true");

    FormulaSource sat_src;
    std::uint32_t sat_max = 0;
    auto* sat_cmd = app.add_subcommand("sat", "Find the least model size");
    sat_src.attach(sat_cmd);
    sat_cmd->add_option("--max-size,-M", sat_max, "Largest size tried")
        ->required()
        ->check(CLI::PositiveNumber);

    Instance compile_inst;
    bool     corrupt = false;
    auto*    compile_cmd
        = app.add_subcommand("compile", "Compile a word problem instance");
    compile_inst.attach(compile_cmd);
    compile_cmd->add_flag("--corrupt-compiler", corrupt)->group("");

    Instance      oracle_inst;
    std::uint32_t oracle_size = 0;
    auto*         oracle_cmd
        = app.add_subcommand("oracle", "Search a separating semigroup");
    oracle_inst.attach(oracle_cmd);
    oracle_cmd->add_option("--size,-m", oracle_size, "Domain size")
        ->required()
        ->check(CLI::PositiveNumber);

    Instance      cross_inst;
    std::uint32_t cross_max = 0;
    auto*         cross_cmd = app.add_subcommand(
        "crosscheck", "Compare the compiled sentence with the oracle");
    cross_inst.attach(cross_cmd);
    cross_cmd->add_option("--max-size,-M", cross_max, "Largest size checked")
        ->required()
        ->check(CLI::PositiveNumber);
    cross_cmd->add_flag("--corrupt-compiler", corrupt)->group("");

    std::string fixture_name;
    auto* fixture_cmd = app.add_subcommand("fixture", "Print a fixture");
    fixture_cmd->add_option("name", fixture_name)
        ->required()
        ->check(CLI::IsMember({"ceitin-h12", "ceitin-e10",
                               "ceitin-presentation", "ehrenfeucht",
                               "infinity"}));

    std::vector<std::string> argv_store{"henkin"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store) {
      argv.push_back(a.c_str());
    }

    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : usage_error;
    }

    try {
      if (*eval_cmd) {
        return cmd_eval(eval_src, eval_size, naive, show_witness, budget, in,
                        out);
      }
      if (*sat_cmd) {
        return cmd_sat(sat_src, sat_max, budget, in, out);
      }
      if (*compile_cmd) {
        return cmd_compile(compile_inst, corrupt, in, out);
      }
      if (*oracle_cmd) {
        return cmd_oracle(oracle_inst, oracle_size, budget, in, out);
      }
      if (*cross_cmd) {
        return cmd_crosscheck(cross_inst, cross_max, budget, corrupt, in, out);
      }
      return cmd_fixture(fixture_name, out);
    } catch (text::ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return usage_error;
    } catch (InputError const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    } catch (ResourceLimitExceeded const& e) {
      err << "resource limit exceeded";
      if (e.size()) {
        err << " at size " << *e.size();
      }
      err << ": " << e.what() << '\n';
      return out_of_budget;
    }
  }

}  // namespace henkin::cli
