#include "henkin/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace henkin {

  bool is_letter(char c) noexcept {
    return c >= 'a' && c <= 'z';
  }

  Word::Word(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw std::invalid_argument("empty word");
    }
    if (!std::all_of(letters_.begin(), letters_.end(), is_letter)) {
      throw std::invalid_argument("illegal character in word '" + letters_
                                  + "'");
    }
  }

  std::set<Letter> Word::letters() const {
    std::set<Letter> out;
    for (char c : letters_) {
      out.insert(Letter{c});
    }
    return out;
  }

  Word operator+(Word const& a, Word const& b) {
    return Word(a.str() + b.str());
  }

  std::set<Letter> Equation::letters() const {
    auto out = lhs.letters();
    out.merge(rhs.letters());
    return out;
  }

  Presentation::Presentation(std::vector<Equation> equations)
      : equations_(std::move(equations)) {
    for (auto const& e : equations_) {
      alphabet_.merge(e.letters());
    }
  }

  Presentation::Presentation(std::vector<Equation> equations,
                             std::set<Letter>      alphabet)
      : Presentation(std::move(equations)) {
    alphabet_.merge(alphabet);
  }

  std::string to_string(Equation const& e) {
    return e.lhs.str() + " = " + e.rhs.str();
  }

  std::string to_string(Presentation const& p) {
    std::string out;
    for (auto const& e : p.equations()) {
      out += to_string(e);
      out += '\n';
    }
    return out;
  }

}  // namespace henkin
