#include "structura/fincat/adjunctions.hpp"

#include <algorithm>

namespace structura {

  Functor<FinSet, FinTop> discrete_functor() {
    return {FinSet{},
            FinTop{},
            "D",
            [](std::size_t n) { return Space::discrete(n); },
            [](Arrow<std::size_t> const& f) {
              return Arrow<Space>{Space::discrete(f.dom), Space::discrete(f.cod), f.image};
            }};
  }

  Functor<FinTop, FinSet> forgetful_functor() {
    return {FinTop{},
            FinSet{},
            "U",
            [](Space const& x) { return x.size(); },
            [](Arrow<Space> const& f) {
              return Arrow<std::size_t>{f.dom.size(), f.cod.size(), f.image};
            }};
  }

  Adjunction<FinSet, FinTop> make_discrete_forgetful_adjunction() {
    auto d  = discrete_functor();
    auto u  = forgetful_functor();
    auto ud = compose(u, d);
    auto du = compose(d, u);
    NatTrans<FinSet, FinSet> unit{identity_functor(FinSet{}), ud, [](std::size_t n) {
                                    return FinSet{}.identity(n);
                                  }};
    NatTrans<FinTop, FinTop> counit{du, identity_functor(FinTop{}), [](Space const& x) {
                                      auto id = FinTop{}.identity(x);
                                      return Arrow<Space>{
                                          Space::discrete(x.size()), x, id.image};
                                    }};
    return {"discrete", d, u, unit, counit};
  }

  Functor<FinTop, FinDisc> beta_functor() {
    return {FinTop{},
            FinDisc{},
            "beta",
            [](Space const& x) { return Space::discrete(pi0(x).size()); },
            [](Arrow<Space> const& f) {
              auto const src = pi0(f.dom);
              auto const tgt = component_index(f.cod);
              std::vector<Point> image(src.size());
              for (std::size_t c = 0; c < src.size(); ++c) {
                image[c] = tgt[f.image[src[c].front()]];
              }
              std::size_t const k = f.cod.size() == 0 ? 0 : *std::max_element(tgt.begin(), tgt.end()) + 1;
              return Arrow<Space>{Space::discrete(src.size()), Space::discrete(k), std::move(image)};
            }};
  }

  Functor<FinDisc, FinTop> inclusion_functor() {
    return {FinDisc{},
            FinTop{},
            "I",
            [](Space const& x) { return x; },
            [](Arrow<Space> const& f) { return f; }};
  }

  Adjunction<FinTop, FinDisc> make_beta_adjunction() {
    auto b  = beta_functor();
    auto i  = inclusion_functor();
    auto ib = compose(i, b);
    auto bi = compose(b, i);
    NatTrans<FinTop, FinTop> unit{identity_functor(FinTop{}), ib, [b](Space const& x) {
                                    return Arrow<Space>{x, b(x), component_index(x)};
                                  }};
    NatTrans<FinDisc, FinDisc> counit{bi, identity_functor(FinDisc{}), [](Space const& d) {
                                        auto id = FinDisc{}.identity(d);
                                        return Arrow<Space>{
                                            Space::discrete(pi0(d).size()), d, id.image};
                                      }};
    return {"beta", b, i, unit, counit};
  }

}  // namespace structura
