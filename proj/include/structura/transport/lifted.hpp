#pragma once

#include <optional>
#include <string>
#include <vector>

#include "structura/error.hpp"
#include "structura/fincat/category.hpp"
#include "structura/fincat/finite.hpp"
#include "structura/lawvere/structure.hpp"

namespace structura {

  // A morphism of structures: the base must commute with every operation.
  template <ProductCategory Cat>
  struct LiftedMorphism {
    StructuredObject<Cat>  source;
    StructuredObject<Cat>  target;
    typename Cat::Morphism base;
  };

  template <ProductCategory Cat>
  typename Cat::Morphism const& forget_lifted(LiftedMorphism<Cat> const& f) {
    return f.base;
  }

  // Why base is not a structure morphism source -> target, or nullopt.
  template <ProductCategory Cat>
  std::optional<std::string> homomorphism_failure(StructuredObject<Cat> const&  source,
                                                  StructuredObject<Cat> const&  target,
                                                  typename Cat::Morphism const& base) {
    auto const& cat = source.cat;
    if (!(cat.dom(base) == source.carrier) || !(cat.cod(base) == target.carrier)) {
      return "carrier map " + cat.render(base) + " has the wrong type";
    }
    if constexpr (ValidatingCategory<Cat>) {
      if (!cat.is_morphism(base)) {
        return "carrier map " + cat.render(base) + " is not a morphism";
      }
    }
    Powers<Cat> from(cat, source.carrier);
    Powers<Cat> to(cat, target.carrier);
    auto const& sig = source.theory.signature();
    for (std::size_t k = 0; k < sig.size(); ++k) {
      auto const                           n = sig.symbols()[k].arity;
      std::vector<typename Cat::Morphism> legs;
      for (auto const& pr : from(n).projections) {
        legs.push_back(cat.compose(base, pr));
      }
      auto const base_n = pair(cat, to(n), legs, from(n).apex);
      auto const lhs    = cat.compose(base, source.interpretation[k]);
      auto const rhs    = cat.compose(target.interpretation[k], base_n);
      if (!cat.equal(lhs, rhs)) {
        return "'" + sig.symbols()[k].name + "' is not preserved: " + cat.render(lhs)
               + " != " + cat.render(rhs);
      }
    }
    return std::nullopt;
  }

  template <ProductCategory Cat>
  bool is_structure_morphism(LiftedMorphism<Cat> const& f) {
    return !homomorphism_failure(f.source, f.target, f.base).has_value();
  }

  // Every structure morphism source -> target, in hom order.
  template <EnumerableCategory Cat>
  std::vector<LiftedMorphism<Cat>> structure_homs(StructuredObject<Cat> const& source,
                                                  StructuredObject<Cat> const& target) {
    std::vector<LiftedMorphism<Cat>> result;
    for (auto const& f : source.cat.hom(source.carrier, target.carrier)) {
      if (!homomorphism_failure(source, target, f)) {
        result.push_back({source, target, f});
      }
    }
    return result;
  }

  // Post-composition with a product-preserving functor: sigma : C^n -> C
  // becomes F(sigma) after the inverse of the comparison F(C)^n -> F(C^n).
  template <ProductCategory X, ProductCategory Y>
    requires InvertingCategory<Y>
  StructuredObject<Y> transport_structure(Functor<X, Y> const& f, StructuredObject<X> const& s) {
    StructuredObject<Y> t{f.target, s.theory, f(s.carrier), {}};
    Powers<X>           powers(s.cat, s.carrier);
    auto const&         sig = s.theory.signature();
    for (std::size_t k = 0; k < sig.size(); ++k) {
      auto const n          = sig.symbols()[k].arity;
      auto const comparison = comparison_map(f, powers(n));
      auto const inverse    = f.target.inverse(comparison);
      if (!inverse) {
        raise(Errc::not_product_preserving,
              f.name + " does not preserve the " + std::to_string(n) + "-th power of "
                  + s.cat.render(s.carrier));
      }
      t.interpretation.push_back(f.target.compose(f(s.interpretation[k]), *inverse));
    }
    return t;
  }

  // The adjunction F -| G lifted to structures of one presentation.
  template <EnumerableCategory C, EnumerableCategory D>
    requires InvertingCategory<C> && InvertingCategory<D>
  class LiftedAdjunction {
   public:
    LiftedAdjunction(Adjunction<C, D> adj, Presentation p)
        : _adj(std::move(adj)), _p(std::move(p)) {}

    Adjunction<C, D> const& base() const noexcept {
      return _adj;
    }
    Presentation const& presentation() const noexcept {
      return _p;
    }
    C const& lower() const {
      return _adj.lower();
    }
    D const& upper() const {
      return _adj.upper();
    }

    StructuredObject<D> left(StructuredObject<C> const& s) const {
      return transport_structure(_adj.left, s);
    }
    StructuredObject<C> right(StructuredObject<D> const& s) const {
      return transport_structure(_adj.right, s);
    }
    LiftedMorphism<D> left(LiftedMorphism<C> const& f) const {
      return {left(f.source), left(f.target), _adj.left(f.base)};
    }
    LiftedMorphism<C> right(LiftedMorphism<D> const& f) const {
      return {right(f.source), right(f.target), _adj.right(f.base)};
    }

    // C -> G F C over the unit.
    LiftedMorphism<C> unit(StructuredObject<C> const& s) const {
      return {s, right(left(s)), _adj.unit(s.carrier)};
    }
    // F G D -> D over the counit.
    LiftedMorphism<D> counit(StructuredObject<D> const& s) const {
      return {left(right(s)), s, _adj.counit(s.carrier)};
    }

    // tau : F C -> D  |->  G tau . eta_C : C -> G D.
    LiftedMorphism<C> alpha(StructuredObject<C> const& c, LiftedMorphism<D> const& tau) const {
      return {c, right(tau.target),
              lower().compose(_adj.right(tau.base), _adj.unit(c.carrier))};
    }
    // sigma : C -> G D  |->  eps_D . F sigma : F C -> D.
    LiftedMorphism<D> beta(LiftedMorphism<C> const& sigma, StructuredObject<D> const& d) const {
      return {left(sigma.source), d,
              upper().compose(_adj.counit(d.carrier), _adj.left(sigma.base))};
    }

   private:
    Adjunction<C, D> _adj;
    Presentation     _p;
  };

  // Checks that F preserves the empty, unary and binary products of objects
  // with at most `sample_points` points; throws NotProductPreserving.
  template <EnumerableCategory C, EnumerableCategory D>
    requires InvertingCategory<C> && InvertingCategory<D>
  LiftedAdjunction<C, D> lift_adjunction(Adjunction<C, D> adj,
                                         Presentation     p,
                                         std::size_t      sample_points = 2) {
    auto const lists  = small_factor_lists(adj.lower().objects(sample_points));
    auto const tests  = adj.upper().objects(sample_points);
    auto const report = product_preservation_report(
        adj.left,
        std::span<std::vector<typename C::Object> const>(lists),
        std::span<typename D::Object const>(tests));
    if (!report.passed()) {
      auto const& why = report.failures().front();
      raise(Errc::not_product_preserving, why.subject + ": " + why.witness);
    }
    return LiftedAdjunction<C, D>(std::move(adj), std::move(p));
  }

  template <ProductCategory C, ProductCategory D>
  struct Ascent {
    StructuredObject<D> structure;  // F C
    LiftedMorphism<C>   unit;       // C -> G F C, over eta
  };

  template <ProductCategory C, ProductCategory D>
  struct Descent {
    StructuredObject<C> structure;  // G D
    LiftedMorphism<D>   counit;     // F G D -> D, over eps
  };

  namespace detail {
    template <class Cat>
    void reject_empty_carrier(StructuredObject<Cat> const& s) {
      if (s.theory.signature().has_constants() && s.cat.points(s.carrier) == 0) {
        raise(Errc::domain_error,
              "'" + s.theory.name() + "' has constants, so the empty carrier carries no structure");
      }
    }
  }  // namespace detail

  template <EnumerableCategory C, EnumerableCategory D>
  Ascent<C, D> ascend(StructuredObject<C> const& s, LiftedAdjunction<C, D> const& l) {
    detail::reject_empty_carrier(s);
    return {l.left(s), l.unit(s)};
  }

  template <EnumerableCategory C, EnumerableCategory D>
  Descent<C, D> descend(StructuredObject<D> const& s, LiftedAdjunction<C, D> const& l) {
    detail::reject_empty_carrier(s);
    return {l.right(s), l.counit(s)};
  }

}  // namespace structura
