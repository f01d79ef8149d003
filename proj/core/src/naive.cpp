// Reference semantics: direct recursion over the syntax tree, every Henkin
// node decided by enumerating all combinations of complete Skolem tables.
// Shares nothing with the backtracking engine beyond the public types.

#include "henkin/evaluator.hpp"
#include "internal.hpp"

namespace henkin::eval {

  namespace {

    class Naive {
     public:
      Naive(std::uint32_t m, std::uint64_t budget, Valuation env)
          : m_(m), budget_(budget), env_(std::move(env)) {}

      bool eval(Formula const& f) {
        using K = Formula::Kind;
        switch (f.kind()) {
          case K::equal: return env_.at(f.lhs_var()) == env_.at(f.rhs_var());
          case K::truth: return true;
          case K::falsity: return false;
          case K::negation: {
            ++suppress_;
            bool r = !eval(f.operand(0));
            --suppress_;
            return r;
          }
          case K::conjunction:
            for (auto const& g : f.operands()) {
              if (!eval(g)) {
                return false;
              }
            }
            return true;
          case K::disjunction:
            for (auto const& g : f.operands()) {
              if (eval(g)) {
                return true;
              }
            }
            return false;
          case K::implication: {
            ++suppress_;
            bool lhs = eval(f.operand(0));
            --suppress_;
            return !lhs || eval(f.operand(1));
          }
          case K::equivalence: {
            ++suppress_;
            bool r = eval(f.operand(0)) == eval(f.operand(1));
            --suppress_;
            return r;
          }
          case K::forall:
          case K::exists: {
            Saved saved(*this, f.bound());
            return quantify(f, 0);
          }
          case K::branch: return branch(f);
        }
        return false;
      }

      std::uint64_t             nodes() const { return nodes_; }
      std::vector<SkolemTable>& witness() { return witness_; }

     private:
      // Restores the outer values of variables rebound by a binder.
      struct Saved {
        Saved(Naive& n, std::vector<Variable> const& vs) : self(n) {
          for (auto const& v : vs) {
            auto it = self.env_.find(v);
            old.emplace_back(v, it == self.env_.end()
                                    ? std::nullopt
                                    : std::optional<Element>(it->second));
          }
        }
        ~Saved() {
          for (auto const& [v, x] : old) {
            if (x) {
              self.env_[v] = *x;
            } else {
              self.env_.erase(v);
            }
          }
        }
        Naive&                                                self;
        std::vector<std::pair<Variable, std::optional<Element>>> old;
      };

      void tick() {
        if (++nodes_ > budget_) {
          throw ResourceLimitExceeded(
              "node budget of " + std::to_string(budget_) + " exhausted",
              nodes_, m_);
        }
      }

      bool quantify(Formula const& f, std::size_t k) {
        auto const& vs = f.bound();
        if (k == vs.size()) {
          return eval(f.body());
        }
        bool const is_exists = f.kind() == Formula::Kind::exists;
        for (Element x = 0; x < m_; ++x) {
          tick();
          env_[vs[k]] = x;
          if (quantify(f, k + 1) == is_exists) {
            return is_exists;
          }
        }
        return !is_exists;
      }

      static bool advance(std::vector<Element>& digits, std::uint32_t m) {
        for (std::size_t i = digits.size(); i-- > 0;) {
          if (++digits[i] < m) {
            return true;
          }
          digits[i] = 0;
        }
        return false;
      }

      bool branch(Formula const& f) {
        auto const& pre = f.prefix();
        auto const& es  = pre.existentials();
        std::vector<Variable> all = pre.universals();
        for (auto const& e : es) {
          all.push_back(e.var);
        }
        Saved saved(*this, all);

        std::vector<SkolemTable> tables;
        for (auto const& e : es) {
          std::size_t size = 1;
          for (std::size_t i = 0; i < e.deps.size(); ++i) {
            if (size > (std::size_t{1} << 24) / m_) {
              throw ResourceLimitExceeded("Skolem tables too large", nodes_,
                                          m_);
            }
            size *= m_;
          }
          tables.push_back({e.var, e.deps.size(),
                            std::vector<Element>(size, 0)});
        }

        do {
          tick();
          if (holds_everywhere(f, tables)) {
            if (suppress_ == 0) {
              witness_ = tables;
            }
            return true;
          }
        } while (next_combination(tables));
        return false;
      }

      bool next_combination(std::vector<SkolemTable>& tables) const {
        for (std::size_t j = tables.size(); j-- > 0;) {
          if (advance(tables[j].entries, m_)) {
            return true;
          }
        }
        return false;
      }

      bool holds_everywhere(Formula const&                  f,
                            std::vector<SkolemTable> const& tables) {
        auto const&          pre = f.prefix();
        auto const&          us  = pre.universals();
        std::vector<Element> tuple(us.size(), 0);
        std::vector<Element> args;
        ++suppress_;
        bool ok = true;
        do {
          for (std::size_t i = 0; i < us.size(); ++i) {
            env_[us[i]] = tuple[i];
          }
          for (std::size_t j = 0; j < tables.size(); ++j) {
            args.clear();
            for (auto const& d : pre.existentials()[j].deps) {
              args.push_back(env_.at(d));
            }
            env_[tables[j].owner] = tables[j](args, m_);
          }
          if (!eval(f.body())) {
            ok = false;
            break;
          }
        } while (advance(tuple, m_));
        --suppress_;
        return ok;
      }

      std::uint32_t            m_;
      std::uint64_t            budget_;
      std::uint64_t            nodes_    = 0;
      int                      suppress_ = 0;
      Valuation                env_;
      std::vector<SkolemTable> witness_;
    };

  }  // namespace

  Evaluation evaluate_naive(Formula const&   f,
                            DomainSize       size,
                            Valuation const& env,
                            Options const&   opts) {
    detail::check_preconditions(f, size, env);
    Naive      naive(size.value(), opts.budget, env);
    Evaluation out;
    out.value   = naive.eval(f);
    out.nodes   = naive.nodes();
    out.witness = out.value ? std::move(naive.witness())
                            : std::vector<SkolemTable>{};
    return out;
  }

}  // namespace henkin::eval
