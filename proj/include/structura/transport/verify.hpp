#pragma once

#include <string>
#include <vector>

#include "structura/equational/model_search.hpp"
#include "structura/report.hpp"
#include "structura/transport/enumerate.hpp"
#include "structura/transport/lifted.hpp"

namespace structura {

  namespace detail {
    template <ProductCategory Cat>
    bool same_tables(StructuredObject<Cat> const& a, StructuredObject<Cat> const& b) {
      if (!(a.carrier == b.carrier) || a.interpretation.size() != b.interpretation.size()) {
        return false;
      }
      for (std::size_t k = 0; k < a.interpretation.size(); ++k) {
        if (!a.cat.equal(a.interpretation[k], b.interpretation[k])) {
          return false;
        }
      }
      return true;
    }

    // Isomorphisms delta : from -> to of structures with
    // keep(delta) . leg == leg, and how many of them have base = id.
    template <EnumerableCategory Cat, class Keep>
    std::pair<std::size_t, std::size_t> comma_isos(StructuredObject<Cat> const& from,
                                                   StructuredObject<Cat> const& to,
                                                   Keep const&                  keeps_leg) {
      std::size_t count = 0, identities = 0;
      auto const& cat   = from.cat;
      if (!(from.carrier == to.carrier)) {
        return {0, 0};
      }
      for (auto const& d : cat.hom(from.carrier, to.carrier)) {
        if (!cat.inverse(d) || homomorphism_failure(from, to, d) || !keeps_leg(d)) {
          continue;
        }
        ++count;
        if (cat.equal(d, cat.identity(from.carrier))) {
          ++identities;
        }
      }
      return {count, identities};
    }
  }  // namespace detail

  // One candidate pair (D0, eta_C) for the ascent of c: D0 must be valid,
  // eta_C must be a structure morphism c -> G(D0), and some structure
  // isomorphism delta : F c -> D0 with base id and G(delta) . eta = eta must
  // exist.  Exposed on its own for fault injection.
  template <EnumerableCategory C, EnumerableCategory D>
  Report verify_ascent_pair(StructuredObject<C> const&    c,
                            StructuredObject<D> const&    candidate,
                            LiftedAdjunction<C, D> const& l,
                            std::size_t                   index = 0) {
    Report      report;
    auto const& adj       = l.base();
    auto const  canonical = l.left(c);
    auto const  eta       = adj.unit(c.carrier);
    std::string subject   = "ascent candidate " + std::to_string(index);
    auto const  valid     = validate_structure(candidate, l.presentation());
    if (!valid.passed()) {
      report.fail(index, subject + " is not a structure", valid.failures().front().subject);
      return report;
    }
    if (auto why = homomorphism_failure(c, l.right(candidate), eta)) {
      report.fail(index, subject + ": unit is not a structure morphism", *why);
      return report;
    }
    auto const [isos, identities] = detail::comma_isos(canonical, candidate, [&](auto const& d) {
      return l.lower().equal(l.lower().compose(adj.right(d), eta), eta);
    });
    std::string witness = "isos=" + std::to_string(isos) + " base-id=" + std::to_string(identities);
    if (identities == 0) {
      report.fail(index, subject + " is not isomorphic to the canonical ascent", witness);
    } else {
      report.ok(index, subject, witness);
    }
    return report;
  }

  template <EnumerableCategory C, EnumerableCategory D>
  Report verify_descent_pair(StructuredObject<D> const&    d,
                             StructuredObject<C> const&    candidate,
                             LiftedAdjunction<C, D> const& l,
                             std::size_t                   index = 0) {
    Report      report;
    auto const& adj       = l.base();
    auto const  canonical = l.right(d);
    auto const  eps       = adj.counit(d.carrier);
    std::string subject   = "descent candidate " + std::to_string(index);
    auto const  valid     = validate_structure(candidate, l.presentation());
    if (!valid.passed()) {
      report.fail(index, subject + " is not a structure", valid.failures().front().subject);
      return report;
    }
    if (auto why = homomorphism_failure(l.left(candidate), d, eps)) {
      report.fail(index, subject + ": counit is not a structure morphism", *why);
      return report;
    }
    auto const [isos, identities] = detail::comma_isos(canonical, candidate, [&](auto const& g) {
      return l.upper().equal(l.upper().compose(eps, adj.left(g)), eps);
    });
    std::string witness = "isos=" + std::to_string(isos) + " base-id=" + std::to_string(identities);
    if (identities == 0) {
      report.fail(index, subject + " is not isomorphic to the canonical descent", witness);
    } else {
      report.ok(index, subject, witness);
    }
    return report;
  }

  // Every structure D0 on F(carrier of c) for which eta is a structure
  // morphism c -> G(D0) is checked against the canonical ascent.  The
  // canonical pair itself must be among them.
  template <EnumerableCategory C, PointCategory D>
  Report verify_unique_ascent(StructuredObject<C> const&    c,
                              LiftedAdjunction<C, D> const& l,
                              SearchBounds const&           bounds = {}) {
    Report      report;
    auto const  canonical = l.left(c);
    auto const  eta       = l.base().unit(c.carrier);
    bool        seen      = false;
    std::size_t index     = 0;
    for (auto const& d0 : enumerate_structures(l.presentation(), canonical.carrier, l.upper(), bounds)) {
      if (!homomorphism_failure(c, l.right(d0), eta)) {
        seen = seen || detail::same_tables(d0, canonical);
        report.merge(verify_ascent_pair(c, d0, l, index));
      }
      ++index;
    }
    if (!seen) {
      report.fail(index, "the canonical ascent is not among the enumerated candidates");
    }
    return report;
  }

  template <PointCategory C, EnumerableCategory D>
  Report verify_unique_descent(StructuredObject<D> const&    d,
                               LiftedAdjunction<C, D> const& l,
                               SearchBounds const&           bounds = {}) {
    Report      report;
    auto const  canonical = l.right(d);
    auto const  eps       = l.base().counit(d.carrier);
    bool        seen      = false;
    std::size_t index     = 0;
    for (auto const& c0 : enumerate_structures(l.presentation(), canonical.carrier, l.lower(), bounds)) {
      if (!homomorphism_failure(l.left(c0), d, eps)) {
        seen = seen || detail::same_tables(c0, canonical);
        report.merge(verify_descent_pair(d, c0, l, index));
      }
      ++index;
    }
    if (!seen) {
      report.fail(index, "the canonical descent is not among the enumerated candidates");
    }
    return report;
  }

  // The lifted adjunction on samples of structures: the square (carriers of
  // lifted structures are the images of carriers), validity of lifted
  // structures, lifted unit and counit over eta and eps and being structure
  // morphisms, the triangle identities, and alpha, beta mutually inverse on
  // every lifted hom-set between the samples.
  template <EnumerableCategory C, EnumerableCategory D>
  Report check_lifted_adjunction(LiftedAdjunction<C, D> const&   l,
                                 std::vector<StructuredObject<C>> const& lower,
                                 std::vector<StructuredObject<D>> const& upper) {
    Report      report;
    auto const& adj = l.base();
    auto const& cc  = l.lower();
    auto const& dd  = l.upper();
    std::size_t k   = 0;  // running check number
    auto check = [&](bool ok, std::string const& subject, std::string const& witness = {}) {
      if (ok) {
        report.pass();
      } else {
        report.fail(k, subject, witness);
      }
      ++k;
    };
    std::size_t i = 0;
    for (auto const& c : lower) {
      auto const fc   = l.left(c);
      auto const unit = l.unit(c);
      auto const tag  = " at lower structure " + std::to_string(i);
      check(fc.carrier == adj.left(c.carrier), "carrier of F(C) is not F(carrier)" + tag);
      check(validate_structure(fc, l.presentation()).passed(), "F(C) is not a structure" + tag);
      check(cc.equal(unit.base, adj.unit(c.carrier)), "U(unit) is not eta" + tag);
      auto why = homomorphism_failure(unit.source, unit.target, unit.base);
      check(!why, "lifted unit is not a structure morphism" + tag, why.value_or(""));
      auto const tri = dd.compose(adj.counit(fc.carrier), adj.left(unit.base));
      check(dd.equal(tri, dd.identity(fc.carrier)), "eps F . F eta != id" + tag, dd.render(tri));
      ++i;
    }
    std::size_t j = 0;
    for (auto const& d : upper) {
      auto const gd     = l.right(d);
      auto const counit = l.counit(d);
      auto const tag    = " at upper structure " + std::to_string(j);
      check(gd.carrier == adj.right(d.carrier), "carrier of G(D) is not G(carrier)" + tag);
      check(validate_structure(gd, l.presentation()).passed(), "G(D) is not a structure" + tag);
      check(dd.equal(counit.base, adj.counit(d.carrier)), "U(counit) is not eps" + tag);
      auto why = homomorphism_failure(counit.source, counit.target, counit.base);
      check(!why, "lifted counit is not a structure morphism" + tag, why.value_or(""));
      auto const tri = cc.compose(adj.right(counit.base), adj.unit(gd.carrier));
      check(cc.equal(tri, cc.identity(gd.carrier)), "G eps . eta G != id" + tag, cc.render(tri));
      ++j;
    }
    for (std::size_t a = 0; a < lower.size(); ++a) {
      auto const fc = l.left(lower[a]);
      for (std::size_t b = 0; b < upper.size(); ++b) {
        auto const gd  = l.right(upper[b]);
        auto const tag = " for lower " + std::to_string(a) + ", upper " + std::to_string(b);
        auto const taus   = structure_homs(fc, upper[b]);
        auto const sigmas = structure_homs(lower[a], gd);
        check(taus.size() == sigmas.size(), "lifted hom-sets differ in size" + tag,
              std::to_string(taus.size()) + " vs " + std::to_string(sigmas.size()));
        for (auto const& tau : taus) {
          auto const s = l.alpha(lower[a], tau);
          check(is_structure_morphism(s), "alpha(tau) is not a structure morphism" + tag,
                dd.render(tau.base));
          check(dd.equal(l.beta(s, upper[b]).base, tau.base), "beta(alpha(tau)) != tau" + tag,
                dd.render(tau.base));
        }
        for (auto const& sigma : sigmas) {
          auto const t = l.beta(sigma, upper[b]);
          check(is_structure_morphism(t), "beta(sigma) is not a structure morphism" + tag,
                cc.render(sigma.base));
          check(cc.equal(l.alpha(lower[a], t).base, sigma.base), "alpha(beta(sigma)) != sigma" + tag,
                cc.render(sigma.base));
        }
      }
    }
    return report;
  }

}  // namespace structura
