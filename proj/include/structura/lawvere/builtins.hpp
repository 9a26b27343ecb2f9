#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "structura/equational/signature.hpp"
#include "structura/lawvere/term_eq.hpp"

namespace structura {

  // monoid, comm-monoid, group, abelian-group, ring, pointed-set, magma.
  std::vector<std::string> builtin_theory_names();
  std::optional<Presentation> find_builtin_presentation(std::string_view name);
  // Throws UnknownSymbol.
  Presentation builtin_presentation(std::string_view name);

  // Why `oracle` does not fit p, or nullopt.  Checks that both sides of every
  // identity normalize alike, then that t and normalize(t) agree in every
  // model of p with at most 3 elements on seeded random terms.
  std::optional<std::string> oracle_mismatch(Presentation const& p,
                                             TermEq const&       oracle,
                                             std::uint32_t       seed = 0);
  // Throws OracleUnsound with the mismatch.
  void validate_oracle(Presentation const& p, TermEq const& oracle, std::uint32_t seed = 0);

  // Shipped oracles of the family `family` (one of free, monoid,
  // comm-monoid, group, abelian-group, ring, bounded-semantic) for every
  // assignment of p's symbols to the family's roles, in a fixed order.
  std::vector<TermEqPtr> oracle_candidates(Presentation const& p, std::string_view family);

  // The first shipped oracle, trying the families in the order above, that
  // passes validate_oracle.  Falls back to the bounded semantic oracle if
  // allowed; otherwise throws OracleUnsound.  If `family` is given only that
  // family is tried.
  TermEqPtr select_oracle(Presentation const& p,
                          bool                allow_bounded,
                          std::string_view    family = {},
                          std::uint32_t       seed   = 0);

}  // namespace structura
