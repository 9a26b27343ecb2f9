#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "structura/equational/signature.hpp"
#include "structura/error.hpp"
#include "structura/fincat/category.hpp"
#include "structura/lawvere/lawvere_theory.hpp"
#include "structura/lawvere/theory_n.hpp"
#include "structura/report.hpp"

namespace structura {

  // An object of cat with one morphism carrier^arity -> carrier per symbol of
  // the theory, stored in signature order.  Nothing is checked on
  // construction; see validate_structure.
  template <ProductCategory Cat>
  struct StructuredObject {
    Cat                                cat;
    Presentation                       theory;
    typename Cat::Object               carrier;
    std::vector<typename Cat::Morphism> interpretation;

    typename Cat::Morphism const& op(std::string_view symbol) const {
      return interpretation.at(theory.signature().index(symbol));
    }
  };

  // Powers carrier^n with their projection cones, computed once per n.
  template <ProductCategory Cat>
  class Powers {
   public:
    Powers(Cat const& cat, typename Cat::Object carrier)
        : _cat(cat), _carrier(std::move(carrier)) {}

    ProductCone<Cat> const& operator()(std::size_t n) {
      auto it = _cones.find(n);
      if (it == _cones.end()) {
        it = _cones.emplace(n, power(_cat, _carrier, n)).first;
      }
      return it->second;
    }

   private:
    Cat const&                              _cat;
    typename Cat::Object                    _carrier;
    std::map<std::size_t, ProductCone<Cat>> _cones;
  };

  namespace detail {
    template <ProductCategory Cat>
    typename Cat::Morphism interpret(Term const&                  t,
                                     StructuredObject<Cat> const& s,
                                     std::size_t                  m,
                                     Powers<Cat>&                 powers) {
      auto const& context = powers(m);
      if (t.is_var()) {
        if (t.var_index() >= m) {
          raise(Errc::unbound_variable,
                "x" + std::to_string(t.var_index()) + " is outside a context of "
                    + std::to_string(m) + " variables");
        }
        return context.projections[t.var_index()];
      }
      auto const arity = s.theory.signature().arity(t.symbol());
      if (arity != t.args().size()) {
        raise(Errc::signature_mismatch, "arity mismatch at '" + t.symbol() + "'");
      }
      std::vector<typename Cat::Morphism> legs;
      for (auto const& a : t.args()) {
        legs.push_back(interpret(a, s, m, powers));
      }
      auto const h = pair(s.cat, powers(arity), legs, context.apex);
      return s.cat.compose(s.op(t.symbol()), h);
    }
  }  // namespace detail

  // The morphism carrier^m -> carrier denoted by t: variables are
  // projections, applications are the interpretation after pairing.
  template <ProductCategory Cat>
  typename Cat::Morphism interpret(Term const& t, StructuredObject<Cat> const& s, std::size_t m) {
    Powers<Cat> powers(s.cat, s.carrier);
    return detail::interpret(t, s, m, powers);
  }

  // Every interpretation must be a morphism carrier^arity -> carrier, and then
  // the two sides of every identity must interpret to the same morphism.
  template <ProductCategory Cat>
  Report validate_structure(StructuredObject<Cat> const& s, Presentation const& p) {
    Report      report;
    auto const& sig = p.signature();
    if (!(sig == s.theory.signature()) || s.interpretation.size() != sig.size()) {
      report.fail(0, "structure is over a different signature than '" + p.name() + "'");
      return report;
    }
    Powers<Cat> powers(s.cat, s.carrier);
    bool        wellformed = true;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      auto const& f      = s.interpretation[k];
      auto const& source = powers(sig.symbols()[k].arity).apex;
      bool        ok     = s.cat.dom(f) == source && s.cat.cod(f) == s.carrier;
      if constexpr (ValidatingCategory<Cat>) {
        ok = ok && s.cat.is_morphism(f);
      }
      if (ok) {
        report.pass();
      } else {
        wellformed = false;
        report.fail(k, "'" + sig.symbols()[k].name + "' is not a morphism "
                           + s.cat.render(source) + " -> " + s.cat.render(s.carrier),
                    s.cat.render(f));
      }
    }
    if (!wellformed) {
      return report;
    }
    for (std::size_t k = 0; k < p.identities().size(); ++k) {
      auto const& id  = p.identities()[k];
      auto        lhs = detail::interpret(id.lhs(), s, id.context(), powers);
      auto        rhs = detail::interpret(id.rhs(), s, id.context(), powers);
      if (s.cat.equal(lhs, rhs)) {
        report.pass();
      } else {
        report.fail(sig.size() + k, "identity " + to_string(id) + " fails",
                    s.cat.render(lhs) + " != " + s.cat.render(rhs));
      }
    }
    return report;
  }

  // object n |-> carrier^n; a tuple (t_1..t_k) : m -> k |-> the pairing of
  // the interpretations of the t_j.
  template <ProductCategory Cat>
  Functor<LawvereTheory, Cat> structure_to_functor(StructuredObject<Cat> const& s,
                                                   LawvereTheory const&         t) {
    // Powers refers to its category, so it must point into the shared copy.
    auto shared = std::make_shared<StructuredObject<Cat>>(s);
    auto powers = std::make_shared<Powers<Cat>>(shared->cat, shared->carrier);
    auto lock   = std::make_shared<std::mutex>();
    return {t,
            s.cat,
            "A",
            [shared, powers, lock](std::size_t n) {
              std::lock_guard guard(*lock);
              return (*powers)(n).apex;
            },
            [shared, powers, lock](TermTuple const& f) {
              std::lock_guard                      guard(*lock);
              std::vector<typename Cat::Morphism> legs;
              for (auto const& c : f.components) {
                legs.push_back(detail::interpret(c, *shared, f.source, *powers));
              }
              return pair(shared->cat, (*powers)(f.target()), legs, (*powers)(f.source).apex);
            }};
  }

  // C = A(1) and sigma = A(sigma(x0..)) after the inverse of the comparison
  // A(1)^n -> A(n).  Throws NotProductPreserving if a comparison is not
  // invertible.
  template <ProductCategory Cat>
    requires InvertingCategory<Cat>
  StructuredObject<Cat> functor_to_structure(Functor<LawvereTheory, Cat> const& a) {
    auto const&           t   = a.source;
    auto const&           sig = t.presentation().signature();
    StructuredObject<Cat> s{a.target, t.presentation(), a(std::size_t{1}), {}};
    for (auto const& op : sig.symbols()) {
      auto const comparison = comparison_map(a, power(t, std::size_t{1}, op.arity));
      auto const inverse    = a.target.inverse(comparison);
      if (!inverse) {
        raise(Errc::not_product_preserving,
              "A(" + std::to_string(op.arity) + ") is not the "
                  + std::to_string(op.arity) + "-th power of A(1)");
      }
      s.interpretation.push_back(a.target.compose(a(t.basic(op.name)), *inverse));
    }
    return s;
  }

  // n |-> C^n; a function u : m -> n (read backwards) |-> the pairing of the
  // projections picked by u.
  template <ProductCategory Cat>
  Functor<TheoryN, Cat> n_algebra(Cat const& cat, typename Cat::Object carrier, std::size_t K = 4) {
    auto keep   = std::make_shared<Cat>(cat);
    auto powers = std::make_shared<Powers<Cat>>(*keep, carrier);
    auto lock   = std::make_shared<std::mutex>();
    return {TheoryN(K),
            cat,
            "N-algebra",
            [keep, powers, lock](std::size_t n) {
              std::lock_guard guard(*lock);
              return (*powers)(n).apex;
            },
            [keep, powers, lock](NArrow const& u) {
              std::lock_guard                      guard(*lock);
              auto const&                          source = (*powers)(u.source);
              std::vector<typename Cat::Morphism> legs;
              for (auto v : u.pick) {
                legs.push_back(source.projections[v]);
              }
              return pair(*keep, (*powers)(u.target), legs, source.apex);
            }};
  }

  // A(1), after checking that every A(n), n <= K, is the n-th power of A(1).
  template <ProductCategory Cat>
    requires InvertingCategory<Cat>
  typename Cat::Object eval_at_one(Functor<TheoryN, Cat> const& a) {
    for (std::size_t n = 0; n <= a.source.bound(); ++n) {
      auto const comparison = comparison_map(a, power(a.source, std::size_t{1}, n));
      if (!a.target.inverse(comparison)) {
        raise(Errc::not_product_preserving,
              "A(" + std::to_string(n) + ") is not the " + std::to_string(n)
                  + "-th power of A(1)");
      }
    }
    return a(std::size_t{1});
  }

  // The component at 1; it determines every other component.
  template <ProductCategory Cat>
  typename Cat::Morphism eval_at_one(NatTrans<TheoryN, Cat> const& t) {
    return t(std::size_t{1});
  }

}  // namespace structura
