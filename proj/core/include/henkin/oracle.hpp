// Brute-force semigroup side of the reduction: looks for unary functions
// f_c on {0..m-1}, one per letter, under which every equation of a
// presentation holds pointwise while the query's two words differ at some
// point.

#ifndef HENKIN_ORACLE_HPP
#define HENKIN_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "henkin/limits.hpp"
#include "henkin/words.hpp"

namespace henkin::oracle {

  using Element = std::uint32_t;

  class FunctionTable {
   public:
    explicit FunctionTable(std::uint32_t m) : m_(m) {}

    std::uint32_t size() const noexcept { return m_; }

    // Throws std::invalid_argument unless `values` has m entries below m.
    void set(Letter c, std::vector<Element> values);

    std::vector<Element> const& operator[](Letter c) const { return maps_.at(c); }
    bool has(Letter c) const { return maps_.count(c) != 0; }

    std::map<Letter, std::vector<Element>> const& maps() const noexcept {
      return maps_;
    }

    friend bool operator==(FunctionTable const&, FunctionTable const&) = default;

   private:
    std::uint32_t                          m_;
    std::map<Letter, std::vector<Element>> maps_;
  };

  struct Witness {
    FunctionTable tables;
    Element       point;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  // f_c1(f_c2(...f_ck(p)...)): the last letter applies first.
  Element tr_apply(Word const& word, Element p, FunctionTable const& tables);

  bool check_witness(Presentation const& E,
                     Equation const&     q,
                     Witness const&      candidate);

  struct Options {
    // Candidate function tables tried.
    std::uint64_t budget = default_budget;
  };

  // Lexicographically first witness: letters in alphabetical order, the
  // functions of a letter ordered as base-m numerals of (f(0), ..., f(m-1)),
  // then the least separating point. The alphabet is E's joined with q's.
  std::optional<Witness> find_witness(Presentation const& E,
                                      Equation const&     q,
                                      std::uint32_t       m,
                                      Options const&      opts = {});

  // `a: 0->1 1->1 2->0` per letter, then `point: p`.
  std::string format_witness(Witness const& w);

}  // namespace henkin::oracle

#endif  // HENKIN_ORACLE_HPP
