#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "structura/equational/signature.hpp"

namespace structura {

  // Every term over the signature and the variables x0..x{variables-1} whose
  // size (Term::size) is exactly `size`, sorted by Term ordering.
  std::vector<Term> terms_of_size(Signature const& sig,
                                  std::size_t      variables,
                                  std::size_t      size);

  // Same, for every size in 1..max_size, ordered by size and then by Term.
  std::vector<Term> terms_up_to(Signature const& sig,
                                std::size_t      variables,
                                std::size_t      max_size);

  // A random term of size at most max_size.  Needs a variable or a constant
  // to exist; throws InvalidArgument otherwise.
  Term random_term(Signature const& sig,
                   std::size_t      variables,
                   std::size_t      max_size,
                   std::mt19937&    rng);

}  // namespace structura
