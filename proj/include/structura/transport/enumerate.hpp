#pragma once

#include <concepts>
#include <vector>

#include "structura/equational/algebra.hpp"
#include "structura/equational/model_search.hpp"
#include "structura/fincat/finite.hpp"
#include "structura/lawvere/structure.hpp"

namespace structura {

  template <class Cat>
  concept PointCategory = std::derived_from<Cat, PointMapCategory<typename Cat::Object>>;

  // The structure whose interpretations are the algebra's tables, read as
  // point maps carrier^n -> carrier (row-major on both sides, so the table
  // is the image list).
  template <PointCategory Cat>
  StructuredObject<Cat> structure_from_algebra(Cat const&                  cat,
                                               Presentation const&         p,
                                               typename Cat::Object const& carrier,
                                               FinAlgebra const&           algebra) {
    StructuredObject<Cat> s{cat, p, carrier, {}};
    Powers<Cat>           powers(cat, carrier);
    for (std::size_t k = 0; k < p.signature().size(); ++k) {
      auto const& source = powers(p.signature().symbols()[k].arity).apex;
      s.interpretation.push_back({source, carrier, algebra.table(k)});
    }
    return s;
  }

  // The underlying algebra on the points.  Throws InvalidArgument if an
  // interpretation does not have the shape of a table.
  template <PointCategory Cat>
  FinAlgebra underlying_algebra(StructuredObject<Cat> const& s) {
    std::vector<std::vector<std::size_t>> tables;
    for (auto const& f : s.interpretation) {
      tables.push_back(f.image);
    }
    return FinAlgebra(s.theory.signature(), s.cat.points(s.carrier), std::move(tables));
  }

  // Every structure of the presentation on `carrier`, in the order of
  // enumerate_algebras: only tables that are morphisms of cat are produced.
  // Throws BoundExceeded past the bounds.
  template <PointCategory Cat>
  std::vector<StructuredObject<Cat>> enumerate_structures(Presentation const&         p,
                                                          typename Cat::Object const& carrier,
                                                          Cat const&                  cat,
                                                          SearchBounds const&         bounds = {}) {
    auto const        n = cat.points(carrier);
    std::vector<bool> order(n * n);
    bool              discrete = true;
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        order[a * n + b] = cat.leq(carrier, a, b);
        discrete         = discrete && (a == b || !order[a * n + b]);
      }
    }
    std::vector<StructuredObject<Cat>> result;
    for (auto const& a : enumerate_algebras(p, n, discrete ? nullptr : &order, bounds)) {
      result.push_back(structure_from_algebra(cat, p, carrier, a));
    }
    return result;
  }

}  // namespace structura
