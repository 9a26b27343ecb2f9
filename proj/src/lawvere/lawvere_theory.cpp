#include "structura/lawvere/lawvere_theory.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "structura/equational/term_enum.hpp"
#include "structura/error.hpp"
#include "structura/lawvere/builtins.hpp"

namespace structura {

  std::string to_string(TermTuple const& f) {
    if (f.components.size() == 1) {
      return to_string(f.components[0]);
    }
    std::string s = "(";
    for (std::size_t j = 0; j < f.components.size(); ++j) {
      s += (j ? ", " : "") + to_string(f.components[j]);
    }
    return s + ")";
  }

  struct LawvereTheory::State {
    Presentation p;
    TermEqPtr    oracle;
    std::size_t  bound;

    std::mutex                                                        mutex;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> terms;
  };

  LawvereTheory::LawvereTheory(Presentation p,
                               TermEqPtr    oracle,
                               std::size_t  K,
                               std::size_t  listing_size)
      : _state(std::make_shared<State>()), _listing_size(listing_size) {
    if (!oracle) {
      raise(Errc::invalid_argument, "a theory needs an equality oracle");
    }
    if (K == 0) {
      K = std::max<std::size_t>(3, p.signature().max_arity() + 1);
    }
    _state->p      = std::move(p);
    _state->oracle = std::move(oracle);
    _state->bound  = K;
  }

  Presentation const& LawvereTheory::presentation() const noexcept {
    return _state->p;
  }
  TermEq const& LawvereTheory::oracle() const noexcept {
    return *_state->oracle;
  }
  TermEqPtr LawvereTheory::oracle_ptr() const noexcept {
    return _state->oracle;
  }
  std::size_t LawvereTheory::object_bound() const noexcept {
    return _state->bound;
  }
  std::size_t LawvereTheory::listing_size() const noexcept {
    return _listing_size;
  }

  LawvereTheory LawvereTheory::with_listing_size(std::size_t listing_size) const {
    LawvereTheory t = *this;
    t._listing_size  = listing_size;
    return t;
  }

  LawvereTheory::Morphism LawvereTheory::identity(Object n) const {
    TermTuple f{n, {}};
    for (std::size_t j = 0; j < n; ++j) {
      f.components.push_back(Term::var(j));
    }
    return f;
  }

  LawvereTheory::Morphism LawvereTheory::compose(Morphism const& g,
                                                 Morphism const& f) const {
    if (f.target() != g.source) {
      raise(Errc::invalid_argument, "composite of non-composable morphisms");
    }
    TermTuple h{f.source, {}};
    for (auto const& t : g.components) {
      h.components.push_back(oracle().normalize(substitute(t, f.components)));
    }
    return h;
  }

  LawvereTheory::Morphism LawvereTheory::normalize(Morphism const& f) const {
    TermTuple h{f.source, {}};
    for (auto const& t : f.components) {
      h.components.push_back(oracle().normalize(t));
    }
    return h;
  }

  bool LawvereTheory::equal(Morphism const& f, Morphism const& g) const {
    if (f.source != g.source || f.target() != g.target()) {
      return false;
    }
    for (std::size_t j = 0; j < f.target(); ++j) {
      if (!oracle().equal(f.components[j], g.components[j])) {
        return false;
      }
    }
    return true;
  }

  bool LawvereTheory::is_morphism(Morphism const& f) const {
    for (auto const& t : f.components) {
      if (t.variable_bound() > f.source) {
        return false;
      }
      try {
        presentation().signature().check(t);
      } catch (Error const&) {
        return false;
      }
    }
    return true;
  }

  LawvereTheory::Morphism LawvereTheory::basic(std::string const& symbol) const {
    auto const        n = presentation().signature().arity(symbol);
    std::vector<Term> args;
    for (std::size_t j = 0; j < n; ++j) {
      args.push_back(Term::var(j));
    }
    return {n, {Term::app(symbol, std::move(args))}};
  }

  std::vector<Term> LawvereTheory::normal_terms(Object m, std::size_t max_size) const {
    std::lock_guard lock(_state->mutex);
    auto            key = std::pair{m, max_size};
    if (auto it = _state->terms.find(key); it != _state->terms.end()) {
      return it->second;
    }
    std::vector<Term> result;
    for (auto const& t : terms_up_to(presentation().signature(), m, max_size)) {
      if (oracle().normalize(t) == t) {
        result.push_back(t);
      }
    }
    _state->terms.emplace(key, result);
    return result;
  }

  std::vector<LawvereTheory::Morphism> LawvereTheory::hom(Object m, Object n) const {
    return hom(m, n, _listing_size);
  }

  std::vector<LawvereTheory::Morphism> LawvereTheory::hom(Object      m,
                                                          Object      n,
                                                          std::size_t max_size) const {
    auto const             terms = normal_terms(m, max_size);
    std::vector<Morphism>  result;
    if (n > 0 && terms.empty()) {
      return result;
    }
    std::vector<std::size_t> at(n, 0);
    while (true) {
      TermTuple f{m, {}};
      for (auto k : at) {
        f.components.push_back(terms[k]);
      }
      result.push_back(std::move(f));
      std::size_t j = n;
      while (j > 0 && ++at[j - 1] == terms.size()) {
        at[--j] = 0;
      }
      if (j == 0) {
        return result;
      }
    }
  }

  std::vector<LawvereTheory::Object> LawvereTheory::objects(std::size_t max) const {
    std::vector<Object> result;
    for (std::size_t n = 0; n <= max && n <= object_bound(); ++n) {
      result.push_back(n);
    }
    return result;
  }

  ProductCone<LawvereTheory> LawvereTheory::product(std::span<Object const> factors) const {
    ProductCone<LawvereTheory> cone{0, {factors.begin(), factors.end()}, {}};
    for (auto n : factors) {
      cone.apex += n;
    }
    std::size_t offset = 0;
    for (auto n : factors) {
      TermTuple pr{cone.apex, {}};
      for (std::size_t j = 0; j < n; ++j) {
        pr.components.push_back(Term::var(offset + j));
      }
      offset += n;
      cone.projections.push_back(std::move(pr));
    }
    return cone;
  }

  LawvereTheory::Morphism LawvereTheory::pair(ProductCone<LawvereTheory> const& cone,
                                              std::span<Morphism const>         legs,
                                              Object const&                     x) const {
    if (legs.size() != cone.factors.size()) {
      raise(Errc::no_mediator, "number of legs does not match the cone");
    }
    if (!(cone == product(cone.factors))) {
      raise(Errc::no_mediator, "pairing is only provided into canonical products");
    }
    TermTuple h{x, {}};
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (legs[i].source != x || legs[i].target() != cone.factors[i]) {
        raise(Errc::no_mediator, "legs do not form a cone over the factors");
      }
      h.components.insert(h.components.end(),
                          legs[i].components.begin(),
                          legs[i].components.end());
    }
    return h;
  }

  LawvereTheory build_lawvere_theory(Presentation p,
                                     TermEqPtr    oracle,
                                     std::size_t  K,
                                     std::size_t  listing_size) {
    if (!oracle) {
      raise(Errc::invalid_argument, "a theory needs an equality oracle");
    }
    validate_oracle(p, *oracle);
    return LawvereTheory(std::move(p), std::move(oracle), K, listing_size);
  }

  Functor<TheoryN, LawvereTheory> theory_functor(LawvereTheory const& t) {
    return {TheoryN(t.object_bound()),
            t,
            "T",
            [](std::size_t n) { return n; },
            [](NArrow const& u) {
              TermTuple f{u.source, {}};
              for (auto v : u.pick) {
                f.components.push_back(Term::var(v));
              }
              return f;
            }};
  }

}  // namespace structura
