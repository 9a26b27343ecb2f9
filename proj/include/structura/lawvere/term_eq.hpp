#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "structura/equational/signature.hpp"

namespace structura {

  // Decides provable equality of terms for one presentation by normal forms.
  // normalize must be idempotent and its results must be closed under the
  // listing used by LawvereTheory::hom (a normal form is a term equal to its
  // own normalization).
  class TermEq {
   public:
    virtual ~TermEq() = default;

    virtual std::string name() const                  = 0;
    virtual Term        normalize(Term const& t) const = 0;

    bool equal(Term const& s, Term const& t) const {
      return s == t || normalize(s) == normalize(t);
    }
    // False for oracles that may identify terms the identities do not.
    virtual bool complete() const {
      return true;
    }
  };

  using TermEqPtr = std::shared_ptr<TermEq const>;

  // No identities: every term is its own normal form.
  TermEqPtr free_term_eq();
  // Flattened words, right-nested; e for the empty word.
  TermEqPtr monoid_term_eq(std::string m, std::string e);
  // Words sorted by variable index.
  TermEqPtr comm_monoid_term_eq(std::string m, std::string e);
  // Freely reduced words; the inverse is applied to variables only.
  TermEqPtr group_term_eq(std::string m, std::string e, std::string i);
  // Integer exponent vectors written as sorted reduced words.
  TermEqPtr abelian_group_term_eq(std::string m, std::string e, std::string i);
  // Noncommutative polynomials with integer coefficients.  Monomials are in
  // graded-lexicographic order; c.W is |c| copies of W added up, under neg
  // when c < 0.
  TermEqPtr ring_term_eq(std::string add,
                         std::string mul,
                         std::string neg,
                         std::string zero,
                         std::string one);

  // Equality in every model of p with at most max_carrier elements.  Sound,
  // not complete in general; reports flag it UNSOUND-AS-COMPLETE.
  TermEqPtr bounded_semantic_term_eq(Presentation p, std::size_t max_carrier = 3);

}  // namespace structura
