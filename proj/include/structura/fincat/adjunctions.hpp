#pragma once

#include "structura/fincat/category.hpp"
#include "structura/fincat/finite.hpp"

namespace structura {

  // S |-> the discrete space on S.
  Functor<FinSet, FinTop> discrete_functor();
  // X |-> its set of points.
  Functor<FinTop, FinSet> forgetful_functor();

  // discrete -| forgetful.  The unit is the identity of S = U(D(S)); the
  // counit D(U(X)) -> X is the identity on points, continuous because the
  // discrete topology is the finest one.
  Adjunction<FinSet, FinTop> make_discrete_forgetful_adjunction();

  // X |-> discrete(pi0(X)), f |-> the induced map on components.  On finite
  // spaces the compact Hausdorff ones are exactly the discrete ones, so this
  // is the Stone-Cech reflection.
  Functor<FinTop, FinDisc> beta_functor();
  Functor<FinDisc, FinTop> inclusion_functor();

  // beta -| inclusion.  The unit is the quotient onto components; the counit
  // is the identity of a discrete space.
  Adjunction<FinTop, FinDisc> make_beta_adjunction();

}  // namespace structura
