#include "henkin/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace henkin::oracle {

  void FunctionTable::set(Letter c, std::vector<Element> values) {
    if (values.size() != m_) {
      throw std::invalid_argument("function table has the wrong length");
    }
    if (std::any_of(values.begin(), values.end(),
                    [&](Element x) { return x >= m_; })) {
      throw std::invalid_argument("function value outside the domain");
    }
    maps_[c] = std::move(values);
  }

  Element tr_apply(Word const& word, Element p, FunctionTable const& tables) {
    for (std::size_t i = word.size(); i-- > 0;) {
      p = tables[word[i]].at(p);
    }
    return p;
  }

  namespace {
    bool holds_everywhere(Equation const& e, FunctionTable const& tables) {
      for (Element p = 0; p < tables.size(); ++p) {
        if (tr_apply(e.lhs, p, tables) != tr_apply(e.rhs, p, tables)) {
          return false;
        }
      }
      return true;
    }

    std::optional<Element> separating_point(Equation const&      q,
                                            FunctionTable const& tables) {
      for (Element p = 0; p < tables.size(); ++p) {
        if (tr_apply(q.lhs, p, tables) != tr_apply(q.rhs, p, tables)) {
          return p;
        }
      }
      return std::nullopt;
    }

    class Search {
     public:
      Search(Presentation const& E, Equation const& q, std::uint32_t m,
             std::uint64_t budget)
          : E_(E), q_(q), m_(m), budget_(budget), tables_(m) {
        auto alphabet = E.alphabet();
        alphabet.merge(q.letters());
        letters_.assign(alphabet.begin(), alphabet.end());

        auto level_of = [&](Letter c) {
          return static_cast<std::size_t>(
              std::find(letters_.begin(), letters_.end(), c)
              - letters_.begin());
        };
        ready_.resize(letters_.size());
        relevant_.assign(letters_.size(), false);
        for (auto const& e : E.equations()) {
          auto ls = e.letters();
          ready_[level_of(*ls.rbegin())].push_back(&e);
          for (auto c : ls) {
            relevant_[level_of(c)] = true;
          }
        }
        for (auto c : q.letters()) {
          relevant_[level_of(c)] = true;
        }
      }

      std::optional<Witness> run() {
        if (descend(0)) {
          return Witness{tables_, *point_};
        }
        return std::nullopt;
      }

     private:
      void tick() {
        if (++nodes_ > budget_) {
          throw ResourceLimitExceeded(
              "oracle budget of " + std::to_string(budget_) + " exhausted",
              nodes_, m_);
        }
      }

      // A letter that occurs nowhere cannot matter; its first table stands
      // in for all of them.
      bool descend(std::size_t level) {
        if (level == letters_.size()) {
          point_ = separating_point(q_, tables_);
          return point_.has_value();
        }
        std::vector<Element> f(m_, 0);
        do {
          tick();
          tables_.set(letters_[level], f);
          bool ok = std::all_of(
              ready_[level].begin(), ready_[level].end(),
              [&](Equation const* e) { return holds_everywhere(*e, tables_); });
          if (ok && descend(level + 1)) {
            return true;
          }
        } while (relevant_[level] && next(f));
        return false;
      }

      bool next(std::vector<Element>& f) const {
        for (std::size_t i = f.size(); i-- > 0;) {
          if (++f[i] < m_) {
            return true;
          }
          f[i] = 0;
        }
        return false;
      }

      Presentation const&                        E_;
      Equation const&                            q_;
      std::uint32_t                              m_;
      std::uint64_t                              budget_;
      std::uint64_t                              nodes_ = 0;
      FunctionTable                              tables_;
      std::vector<Letter>                        letters_;
      std::vector<std::vector<Equation const*>>  ready_;
      std::vector<bool>                          relevant_;
      std::optional<Element>                     point_;
    };
  }  // namespace

  bool check_witness(Presentation const& E,
                     Equation const&     q,
                     Witness const&      candidate) {
    auto const& tables = candidate.tables;
    auto        needed = E.alphabet();
    needed.merge(q.letters());
    for (auto c : needed) {
      if (!tables.has(c)) {
        return false;
      }
    }
    if (candidate.point >= tables.size()) {
      return false;
    }
    for (auto const& e : E.equations()) {
      if (!holds_everywhere(e, tables)) {
        return false;
      }
    }
    return tr_apply(q.lhs, candidate.point, tables)
           != tr_apply(q.rhs, candidate.point, tables);
  }

  std::optional<Witness> find_witness(Presentation const& E,
                                      Equation const&     q,
                                      std::uint32_t       m,
                                      Options const&      opts) {
    if (m == 0) {
      throw std::invalid_argument("domain size must be at least 1");
    }
    return Search(E, q, m, opts.budget).run();
  }

  std::string format_witness(Witness const& w) {
    std::string out;
    for (auto const& [c, f] : w.tables.maps()) {
      out += c.symbol;
      out += ':';
      for (Element p = 0; p < f.size(); ++p) {
        out += ' ' + std::to_string(p) + "->" + std::to_string(f[p]);
      }
      out += '\n';
    }
    out += "point: " + std::to_string(w.point) + '\n';
    return out;
  }

}  // namespace henkin::oracle
