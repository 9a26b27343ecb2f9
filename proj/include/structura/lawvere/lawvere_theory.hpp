#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "structura/equational/signature.hpp"
#include "structura/fincat/category.hpp"
#include "structura/lawvere/term_eq.hpp"
#include "structura/lawvere/theory_n.hpp"

namespace structura {

  // A morphism m -> n: n terms over the variables x0..x{m-1}.
  struct TermTuple {
    std::size_t       source;
    std::vector<Term> components;

    std::size_t target() const noexcept {
      return components.size();
    }

    friend bool operator==(TermTuple const&, TermTuple const&)                  = default;
    friend std::strong_ordering operator<=>(TermTuple const&, TermTuple const&) = default;
  };

  // "t" for a single component, "(t1, t2)" otherwise.
  std::string to_string(TermTuple const& f);

  // The one-sorted theory of a presentation.  Morphisms are kept in normal
  // form, so equality is syntactic after normalization.  Hom-sets are
  // infinite in general; hom() lists the normal forms up to a term size and
  // memoizes each listing.
  class LawvereTheory {
   public:
    using Object   = std::size_t;
    using Morphism = TermTuple;

    // K = 0 picks max(3, largest arity + 1).
    LawvereTheory(Presentation p,
                  TermEqPtr    oracle,
                  std::size_t  K              = 0,
                  std::size_t  listing_size   = 3);

    Presentation const& presentation() const noexcept;
    TermEq const&       oracle() const noexcept;
    TermEqPtr           oracle_ptr() const noexcept;
    std::size_t         object_bound() const noexcept;
    std::size_t         listing_size() const noexcept;
    // Same theory, different listing size; shares the memo of hom listings.
    LawvereTheory with_listing_size(std::size_t listing_size) const;

    Object dom(Morphism const& f) const {
      return f.source;
    }
    Object cod(Morphism const& f) const {
      return f.target();
    }
    Morphism identity(Object n) const;
    // Substitution followed by normalization; throws InvalidArgument unless
    // cod(f) == dom(g).
    Morphism compose(Morphism const& g, Morphism const& f) const;
    bool     equal(Morphism const& f, Morphism const& g) const;
    Morphism normalize(Morphism const& f) const;
    // Variables below the source and well-formed over the signature.
    bool is_morphism(Morphism const& f) const;

    // The basic operation symbol(x0, ..., x{n-1}) : n -> 1.
    Morphism basic(std::string const& symbol) const;

    // Normal-form tuples m -> n whose terms have size at most
    // listing_size(), sorted by size and then by term.
    std::vector<Morphism> hom(Object m, Object n) const;
    std::vector<Morphism> hom(Object m, Object n, std::size_t max_size) const;
    // Normal forms of single terms in m variables up to the given size.
    std::vector<Term> normal_terms(Object m, std::size_t max_size) const;

    std::vector<Object> objects(std::size_t max) const;

    ProductCone<LawvereTheory> product(std::span<Object const> factors) const;
    Morphism                   pair(ProductCone<LawvereTheory> const& cone,
                                    std::span<Morphism const>         legs,
                                    Object const&                     x) const;

    std::string render(Morphism const& f) const {
      return to_string(f);
    }
    std::string render(Object n) const {
      return std::to_string(n);
    }

   private:
    struct State;
    std::shared_ptr<State> _state;
    std::size_t            _listing_size;
  };

  // Validates the oracle against p first (OracleUnsound).
  LawvereTheory build_lawvere_theory(Presentation p,
                                     TermEqPtr    oracle,
                                     std::size_t  K            = 0,
                                     std::size_t  listing_size = 3);

  // Identity on objects; a function u becomes (x_{u(0)}, ..., x_{u(n-1)}).
  Functor<TheoryN, LawvereTheory> theory_functor(LawvereTheory const& t);

}  // namespace structura
