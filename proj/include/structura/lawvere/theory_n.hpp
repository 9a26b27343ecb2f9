#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "structura/fincat/category.hpp"

namespace structura {

  // A morphism m -> n of the theory of sets: the n-tuple of variables
  // (x_{pick[0]}, ..., x_{pick[n-1]}) in context m, i.e. a function
  // {0..n-1} -> {0..m-1} read backwards.
  struct NArrow {
    std::size_t              source;
    std::size_t              target;
    std::vector<std::size_t> pick;

    friend bool operator==(NArrow const&, NArrow const&)                  = default;
    friend std::strong_ordering operator<=>(NArrow const&, NArrow const&) = default;
  };

  // Objects 0..K (any natural number is accepted, K bounds objects()); the
  // product of m and n is m + n.
  class TheoryN {
   public:
    using Object   = std::size_t;
    using Morphism = NArrow;

    explicit TheoryN(std::size_t bound = 4) : _bound(bound) {}

    std::size_t bound() const noexcept {
      return _bound;
    }

    Object dom(Morphism const& f) const {
      return f.source;
    }
    Object cod(Morphism const& f) const {
      return f.target;
    }
    Morphism identity(Object n) const;
    // g . f; throws InvalidArgument unless cod(f) == dom(g).
    Morphism compose(Morphism const& g, Morphism const& f) const;
    bool     equal(Morphism const& f, Morphism const& g) const {
      return f == g;
    }
    bool is_morphism(Morphism const& f) const;

    // All m^n morphisms m -> n, lexicographic in pick.
    std::vector<Morphism> hom(Object m, Object n) const;
    std::vector<Object>   objects(std::size_t max) const;

    ProductCone<TheoryN> product(std::span<Object const> factors) const;
    Morphism             pair(ProductCone<TheoryN> const& cone,
                              std::span<Morphism const>   legs,
                              Object const&               x) const;

    std::string render(Morphism const& f) const;
    std::string render(Object n) const {
      return std::to_string(n);
    }

   private:
    std::size_t _bound;
  };

  // Throws InvalidArgument if K = 0.
  TheoryN build_theory_n(std::size_t K);

}  // namespace structura
