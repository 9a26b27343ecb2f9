#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "structura/equational/algebra.hpp"

namespace structura {

  struct SearchBounds {
    std::size_t max_carrier   = 4;
    std::size_t max_arity     = 2;
    std::size_t max_variables = 3;
    // Search-tree nodes before giving up with BoundExceeded; 0 = unlimited.
    std::size_t max_nodes = 0;
  };

  // Every algebra of the presentation on {0..carrier-1}, in lexicographic
  // order of the tables (constants first, then unary, then binary symbols,
  // each in signature order).  If `order` is given it is a carrier x carrier
  // row-major preorder and only tables monotone for the componentwise order
  // are produced.  Throws BoundExceeded when any bound is violated; never
  // truncates silently.
  std::vector<FinAlgebra> enumerate_algebras(Presentation const&      p,
                                             std::size_t              carrier,
                                             std::vector<bool> const* order = nullptr,
                                             SearchBounds const&      bounds = {});

  // All algebras of the presentation with carriers 1..max_carrier (and the
  // empty carrier too when the signature has no constants).
  std::vector<FinAlgebra> enumerate_models(Presentation const& p,
                                           std::size_t         max_carrier,
                                           SearchBounds const& bounds = {});

}  // namespace structura
