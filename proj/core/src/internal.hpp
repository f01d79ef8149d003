#ifndef HENKIN_SRC_INTERNAL_HPP
#define HENKIN_SRC_INTERNAL_HPP

#include "henkin/evaluator.hpp"

namespace henkin::eval::detail {

  // Throws std::invalid_argument unless `f` validates and `env` covers its
  // free variables with elements of the domain.
  void check_preconditions(Formula const&   f,
                           DomainSize       size,
                           Valuation const& env);

}  // namespace henkin::eval::detail

#endif  // HENKIN_SRC_INTERNAL_HPP
