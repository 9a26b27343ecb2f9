#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "structura/error.hpp"
#include "structura/report.hpp"

namespace structura {

  template <class Object, class Morphism>
  struct Cone {
    Object                apex;
    std::vector<Object>   factors;
    std::vector<Morphism> projections;

    friend bool operator==(Cone const&, Cone const&) = default;
  };

  template <class Cat>
  using ProductCone = Cone<typename Cat::Object, typename Cat::Morphism>;

  // A category whose morphism equality is decidable.
  template <class C>
  concept Category = std::equality_comparable<typename C::Object> && requires(
      C const&                      c,
      typename C::Object const&     a,
      typename C::Morphism const&   f) {
    { c.dom(f) } -> std::convertible_to<typename C::Object>;
    { c.cod(f) } -> std::convertible_to<typename C::Object>;
    { c.identity(a) } -> std::convertible_to<typename C::Morphism>;
    { c.compose(f, f) } -> std::convertible_to<typename C::Morphism>;
    { c.equal(f, f) } -> std::convertible_to<bool>;
    { c.render(f) } -> std::convertible_to<std::string>;
    { c.render(a) } -> std::convertible_to<std::string>;
  };

  // A category with a constructive product provider.
  template <class C>
  concept ProductCategory = Category<C> && requires(
      C const&                                    c,
      std::span<typename C::Object const>         objects,
      ProductCone<C> const&                       cone,
      std::span<typename C::Morphism const>       legs,
      typename C::Object const&                   x) {
    { c.product(objects) } -> std::same_as<ProductCone<C>>;
    { c.pair(cone, legs, x) } -> std::convertible_to<typename C::Morphism>;
  };

  // Hom-sets and a bounded object family can be listed.  Morphisms are
  // totally ordered so that enumerations can be searched and deduplicated.
  template <class C>
  concept EnumerableCategory = ProductCategory<C>
      && std::totally_ordered<typename C::Morphism>
      && requires(C const& c, typename C::Object const& a, std::size_t n) {
           { c.hom(a, a) } -> std::same_as<std::vector<typename C::Morphism>>;
           { c.objects(n) } -> std::same_as<std::vector<typename C::Object>>;
         };

  // Categories that can tell a well-formed morphism from raw data.
  template <class C>
  concept ValidatingCategory
      = Category<C> && requires(C const& c, typename C::Morphism const& f) {
          { c.is_morphism(f) } -> std::convertible_to<bool>;
        };

  template <class C>
  concept InvertingCategory
      = Category<C> && requires(C const& c, typename C::Morphism const& f) {
          { c.inverse(f) } -> std::same_as<std::optional<typename C::Morphism>>;
        };

  ////////////////////////////////////////////////////////////////////////
  // Functors, natural transformations, adjunctions
  ////////////////////////////////////////////////////////////////////////

  template <Category Src, Category Tgt>
  struct Functor {
    using Source = Src;
    using Target = Tgt;

    Src         source;
    Tgt         target;
    std::string name;
    std::function<typename Tgt::Object(typename Src::Object const&)>     on_object;
    std::function<typename Tgt::Morphism(typename Src::Morphism const&)> on_morphism;

    typename Tgt::Object operator()(typename Src::Object const& a) const {
      return on_object(a);
    }
    typename Tgt::Morphism operator()(typename Src::Morphism const& f) const {
      return on_morphism(f);
    }
  };

  template <Category C>
  Functor<C, C> identity_functor(C const& cat) {
    return {cat,
            cat,
            "Id",
            [](typename C::Object const& a) { return a; },
            [](typename C::Morphism const& f) { return f; }};
  }

  // g after f.
  template <Category A, Category B, Category C>
  Functor<A, C> compose(Functor<B, C> const& g, Functor<A, B> const& f) {
    return {f.source,
            g.target,
            g.name + f.name,
            [g, f](typename A::Object const& a) { return g(f(a)); },
            [g, f](typename A::Morphism const& m) { return g(f(m)); }};
  }

  template <Category Src, Category Tgt>
  struct NatTrans {
    Functor<Src, Tgt> from;
    Functor<Src, Tgt> to;
    std::function<typename Tgt::Morphism(typename Src::Object const&)> component;

    typename Tgt::Morphism operator()(typename Src::Object const& a) const {
      return component(a);
    }
  };

  // <F, G, unit, counit> : C -> D with F -| G,
  // unit : Id_C => GF and counit : FG => Id_D.
  template <Category C, Category D>
  struct Adjunction {
    std::string    name;
    Functor<C, D>  left;
    Functor<D, C>  right;
    NatTrans<C, C> unit;
    NatTrans<D, D> counit;

    C const& lower() const {
      return left.source;
    }
    D const& upper() const {
      return left.target;
    }
  };

  template <Category C>
  Adjunction<C, C> identity_adjunction(C const& cat) {
    auto id = identity_functor(cat);
    auto eta
        = NatTrans<C, C>{id, id, [cat](auto const& a) { return cat.identity(a); }};
    return {"identity", id, id, eta, eta};
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  template <ProductCategory C>
  ProductCone<C> power(C const& cat, typename C::Object const& a, std::size_t n) {
    std::vector<typename C::Object> factors(n, a);
    return cat.product(std::span<typename C::Object const>(factors));
  }

  template <ProductCategory C>
  ProductCone<C> product(C const& cat, std::vector<typename C::Object> const& factors) {
    return cat.product(std::span<typename C::Object const>(factors));
  }

  // Mediating morphism x -> apex; x is explicit so that zero legs work.
  template <ProductCategory C>
  typename C::Morphism pair(C const&                                 cat,
                            ProductCone<C> const&                    cone,
                            std::vector<typename C::Morphism> const& legs,
                            typename C::Object const&                x) {
    return cat.pair(cone, std::span<typename C::Morphism const>(legs), x);
  }

  namespace detail {
    template <class M>
    bool contains_sorted(std::vector<M> const& sorted, M const& m) {
      return std::binary_search(sorted.begin(), sorted.end(), m);
    }

    template <class Cat>
    std::vector<typename Cat::Morphism> sorted_hom(Cat const&                     cat,
                                                   typename Cat::Object const&    a,
                                                   typename Cat::Object const&    b) {
      auto h = cat.hom(a, b);
      std::sort(h.begin(), h.end());
      return h;
    }
  }  // namespace detail

  // Why `cone` is not a product as seen from the test objects, or nullopt.
  // For each test object X the map h |-> (p_i . h) from hom(X, apex) to the
  // product of the hom(X, factor_i) must be a bijection: that is "exactly
  // one mediator for every cone with vertex X".
  template <EnumerableCategory C>
  std::optional<std::string>
  universality_failure(C const&                             cat,
                       ProductCone<C> const&                cone,
                       std::span<typename C::Object const>  test_objects) {
    using M = typename C::Morphism;
    for (auto const& x : test_objects) {
      std::vector<std::vector<M>> legs;
      std::size_t                 expected = 1;
      for (auto const& f : cone.factors) {
        legs.push_back(detail::sorted_hom(cat, x, f));
        expected *= legs.back().size();
      }
      std::map<std::vector<M>, std::size_t> seen;
      for (auto const& h : cat.hom(x, cone.apex)) {
        std::vector<M> image;
        image.reserve(cone.projections.size());
        for (std::size_t i = 0; i < cone.projections.size(); ++i) {
          image.push_back(cat.compose(cone.projections[i], h));
          if (!detail::contains_sorted(legs[i], image.back())) {
            return "projection " + std::to_string(i) + " after "
                   + cat.render(h) + " is not an enumerated morphism";
          }
        }
        if (++seen[image] > 1) {
          return "two mediators from " + cat.render(x) + " to "
                 + cat.render(cone.apex) + " for the same cone";
        }
      }
      if (seen.size() != expected) {
        return "a cone with vertex " + cat.render(x) + " has no mediator ("
               + std::to_string(seen.size()) + " of "
               + std::to_string(expected) + " cones factor)";
      }
    }
    return std::nullopt;
  }

  template <EnumerableCategory C>
  bool is_universal_cone(C const&                             cat,
                         ProductCone<C> const&                cone,
                         std::span<typename C::Object const>  test_objects) {
    return !universality_failure(cat, cone, test_objects).has_value();
  }

  // Product by universal-property search: the first candidate apex (in the
  // given order) carrying a universal cone, with projections chosen
  // lexicographically.  Throws NoProduct.
  template <EnumerableCategory C>
  ProductCone<C> search_product(C const&                             cat,
                                std::vector<typename C::Object> const& factors,
                                std::span<typename C::Object const>  candidates,
                                std::span<typename C::Object const>  test_objects) {
    using M = typename C::Morphism;
    for (auto const& apex : candidates) {
      std::vector<std::vector<M>> choices;
      bool                        empty = false;
      for (auto const& f : factors) {
        choices.push_back(cat.hom(apex, f));
        empty = empty || choices.back().empty();
      }
      if (empty) {
        continue;
      }
      std::vector<std::size_t> at(factors.size(), 0);
      while (true) {
        ProductCone<C> cone{apex, factors, {}};
        for (std::size_t i = 0; i < factors.size(); ++i) {
          cone.projections.push_back(choices[i][at[i]]);
        }
        if (is_universal_cone(cat, cone, test_objects)) {
          return cone;
        }
        std::size_t i = factors.size();
        while (i > 0 && ++at[i - 1] == choices[i - 1].size()) {
          at[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    }
    raise(Errc::no_product, "no universal cone among the candidate apexes");
  }

  // The unique h : X -> apex with p_i . h = legs[i], found by enumeration.
  // Throws NoMediator / NonUniqueMediator.
  template <EnumerableCategory C>
  typename C::Morphism search_mediator(C const&                                 cat,
                                       ProductCone<C> const&                    cone,
                                       std::vector<typename C::Morphism> const& legs,
                                       typename C::Object const&                x) {
    std::optional<typename C::Morphism> found;
    for (auto const& h : cat.hom(x, cone.apex)) {
      bool ok = true;
      for (std::size_t i = 0; i < legs.size() && ok; ++i) {
        ok = cat.equal(cat.compose(cone.projections[i], h), legs[i]);
      }
      if (!ok) {
        continue;
      }
      if (found) {
        raise(Errc::non_unique_mediator,
              "two mediators into " + cat.render(cone.apex));
      }
      found = h;
    }
    if (!found) {
      raise(Errc::no_mediator, "no mediator into " + cat.render(cone.apex));
    }
    return *found;
  }

  // The canonical comparison F(prod A_i) -> prod F(A_i).
  template <ProductCategory Src, ProductCategory Tgt>
  typename Tgt::Morphism comparison_map(Functor<Src, Tgt> const&  f,
                                        ProductCone<Src> const&   source_cone) {
    std::vector<typename Tgt::Object>   images;
    std::vector<typename Tgt::Morphism> legs;
    for (std::size_t i = 0; i < source_cone.factors.size(); ++i) {
      images.push_back(f(source_cone.factors[i]));
      legs.push_back(f(source_cone.projections[i]));
    }
    auto target_cone = product(f.target, images);
    return pair(f.target, target_cone, legs, f(source_cone.apex));
  }

  // Image of a product cone under f.
  template <ProductCategory Src, Category Tgt>
  ProductCone<Tgt> image_cone(Functor<Src, Tgt> const& f, ProductCone<Src> const& cone) {
    ProductCone<Tgt> result{f(cone.apex), {}, {}};
    for (std::size_t i = 0; i < cone.factors.size(); ++i) {
      result.factors.push_back(f(cone.factors[i]));
      result.projections.push_back(f(cone.projections[i]));
    }
    return result;
  }

  // True iff the image of every source product cone is universal in the
  // target, checked by universal-property search over the test objects.
  // NoProduct from the source propagates.
  template <ProductCategory Src, EnumerableCategory Tgt>
  Report product_preservation_report(
      Functor<Src, Tgt> const&                                  f,
      std::span<std::vector<typename Src::Object> const>        factor_lists,
      std::span<typename Tgt::Object const>                     test_objects) {
    Report report;
    for (std::size_t k = 0; k < factor_lists.size(); ++k) {
      auto cone = product(f.source, factor_lists[k]);
      auto why  = universality_failure(f.target, image_cone(f, cone), test_objects);
      if (why) {
        std::string factors;
        for (auto const& a : factor_lists[k]) {
          factors += (factors.empty() ? "" : " x ") + f.source.render(a);
        }
        report.fail(k, f.name + " on [" + factors + "]", *why);
      } else {
        report.pass();
      }
    }
    return report;
  }

  template <ProductCategory Src, EnumerableCategory Tgt>
  bool is_product_preserving(
      Functor<Src, Tgt> const&                           f,
      std::span<std::vector<typename Src::Object> const> factor_lists,
      std::span<typename Tgt::Object const>              test_objects) {
    return product_preservation_report(f, factor_lists, test_objects).passed();
  }

  // Empty product, every single object, every ordered pair.
  template <class Object>
  std::vector<std::vector<Object>> small_factor_lists(std::vector<Object> const& objects) {
    std::vector<std::vector<Object>> result{{}};
    for (auto const& a : objects) {
      result.push_back({a});
    }
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        result.push_back({a, b});
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification of functors, naturality and adjunctions
  ////////////////////////////////////////////////////////////////////////

  template <EnumerableCategory Src, Category Tgt>
  Report check_functor(Functor<Src, Tgt> const&              f,
                       std::span<typename Src::Object const> sample) {
    Report      report;
    std::size_t index = 0;
    auto const& src   = f.source;
    auto const& tgt   = f.target;
    for (auto const& a : sample) {
      if (tgt.equal(f(src.identity(a)), tgt.identity(f(a)))) {
        report.pass();
      } else {
        report.fail(index, f.name + " does not preserve the identity of "
                               + src.render(a));
      }
      ++index;
    }
    for (auto const& a : sample) {
      for (auto const& b : sample) {
        auto hab = src.hom(a, b);
        if (hab.empty()) {
          continue;
        }
        for (auto const& c : sample) {
          for (auto const& g : src.hom(b, c)) {
            for (auto const& h : hab) {
              if (tgt.equal(f(src.compose(g, h)), tgt.compose(f(g), f(h)))) {
                report.pass();
              } else {
                report.fail(index, f.name + " does not preserve composition",
                            src.render(g) + " . " + src.render(h));
              }
              ++index;
            }
          }
        }
      }
    }
    return report;
  }

  template <EnumerableCategory Src, Category Tgt>
  Report check_naturality(NatTrans<Src, Tgt> const&             t,
                          std::span<typename Src::Object const> sample,
                          std::string const&                    label) {
    Report      report;
    std::size_t index = 0;
    auto const& src   = t.from.source;
    auto const& tgt   = t.from.target;
    for (auto const& a : sample) {
      auto ta = t(a);
      if constexpr (ValidatingCategory<Tgt>) {
        if (!tgt.is_morphism(ta)) {
          report.fail(index++, label + " at " + src.render(a) + " is not a morphism",
                      tgt.render(ta));
          continue;
        }
      }
      if (!(tgt.dom(ta) == t.from(a)) || !(tgt.cod(ta) == t.to(a))) {
        report.fail(index++, label + " at " + src.render(a) + " has the wrong type",
                    tgt.render(ta));
        continue;
      }
      for (auto const& b : sample) {
        auto tb = t(b);
        for (auto const& f : src.hom(a, b)) {
          if (tgt.equal(tgt.compose(tb, t.from(f)), tgt.compose(t.to(f), ta))) {
            report.pass();
          } else {
            report.fail(index, label + " is not natural at " + src.render(f),
                        src.render(a) + " -> " + src.render(b));
          }
          ++index;
        }
      }
    }
    return report;
  }

  // Triangle identities (eps F . F eta = id_F, G eps . eta G = id_G) on the
  // samples, and naturality of the unit and counit.  An empty failure list
  // means verified.
  template <EnumerableCategory C, EnumerableCategory D>
  Report check_adjunction(Adjunction<C, D> const&             adj,
                          std::span<typename C::Object const> lower_sample,
                          std::span<typename D::Object const> upper_sample) {
    Report      report;
    auto const& cc    = adj.lower();
    auto const& dd    = adj.upper();
    std::size_t index = 0;
    for (auto const& a : lower_sample) {
      auto fa  = adj.left(a);
      auto lhs = dd.compose(adj.counit(fa), adj.left(adj.unit(a)));
      if (dd.equal(lhs, dd.identity(fa))) {
        report.pass();
      } else {
        report.fail(index, "triangle eps_F . F(eta) != id at " + cc.render(a),
                    dd.render(lhs));
      }
      ++index;
    }
    for (auto const& d : upper_sample) {
      auto gd  = adj.right(d);
      auto lhs = cc.compose(adj.right(adj.counit(d)), adj.unit(gd));
      if (cc.equal(lhs, cc.identity(gd))) {
        report.pass();
      } else {
        report.fail(index, "triangle G(eps) . eta_G != id at " + dd.render(d),
                    cc.render(lhs));
      }
      ++index;
    }
    report.merge(check_naturality(adj.unit, lower_sample, "unit"));
    report.merge(check_naturality(adj.counit, upper_sample, "counit"));
    return report;
  }

}  // namespace structura
