// Words, equations and finite semigroup presentations over [a-z].

#ifndef HENKIN_WORDS_HPP
#define HENKIN_WORDS_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace henkin {

  struct Letter {
    char symbol;

    friend bool operator==(Letter, Letter) = default;
    friend auto operator<=>(Letter, Letter) = default;
  };

  bool is_letter(char c) noexcept;

  // Nonempty sequence of letters. Throws std::invalid_argument otherwise.
  class Word {
   public:
    explicit Word(std::string letters);

    std::string const& str() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const { return Letter{letters_[i]}; }

    std::set<Letter> letters() const;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::string letters_;
  };

  Word operator+(Word const& a, Word const& b);

  struct Equation {
    Word lhs;
    Word rhs;

    std::set<Letter> letters() const;
    std::size_t length() const noexcept { return lhs.size() + rhs.size(); }

    friend bool operator==(Equation const&, Equation const&) = default;
  };

  class Presentation {
   public:
    Presentation() = default;
    explicit Presentation(std::vector<Equation> equations);
    Presentation(std::vector<Equation> equations, std::set<Letter> alphabet);

    std::vector<Equation> const& equations() const noexcept {
      return equations_;
    }
    // Always a superset of the letters used by the equations.
    std::set<Letter> const& alphabet() const noexcept { return alphabet_; }

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    std::vector<Equation> equations_;
    std::set<Letter>      alphabet_;
  };

  std::string to_string(Equation const& e);
  std::string to_string(Presentation const& p);

}  // namespace henkin

#endif  // HENKIN_WORDS_HPP
