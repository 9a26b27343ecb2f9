#include "structura/lawvere/theory_n.hpp"

#include "structura/error.hpp"

namespace structura {

  TheoryN::Morphism TheoryN::identity(Object n) const {
    NArrow f{n, n, std::vector<std::size_t>(n)};
    for (std::size_t j = 0; j < n; ++j) {
      f.pick[j] = j;
    }
    return f;
  }

  // The variable y_l of g is replaced by x_{f.pick[l]}.
  TheoryN::Morphism TheoryN::compose(Morphism const& g, Morphism const& f) const {
    if (f.target != g.source) {
      raise(Errc::invalid_argument, "composite of non-composable morphisms");
    }
    NArrow h{f.source, g.target, std::vector<std::size_t>(g.target)};
    for (std::size_t l = 0; l < g.target; ++l) {
      h.pick[l] = f.pick[g.pick[l]];
    }
    return h;
  }

  bool TheoryN::is_morphism(Morphism const& f) const {
    if (f.pick.size() != f.target) {
      return false;
    }
    for (auto v : f.pick) {
      if (v >= f.source) {
        return false;
      }
    }
    return true;
  }

  std::vector<TheoryN::Morphism> TheoryN::hom(Object m, Object n) const {
    std::vector<Morphism> result;
    if (n > 0 && m == 0) {
      return result;
    }
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      result.push_back({m, n, pick});
      std::size_t j = n;
      while (j > 0 && ++pick[j - 1] == m) {
        pick[--j] = 0;
      }
      if (j == 0) {
        return result;
      }
    }
  }

  std::vector<TheoryN::Object> TheoryN::objects(std::size_t max) const {
    std::vector<Object> result;
    for (std::size_t n = 0; n <= max && n <= _bound; ++n) {
      result.push_back(n);
    }
    return result;
  }

  ProductCone<TheoryN> TheoryN::product(std::span<Object const> factors) const {
    ProductCone<TheoryN> cone{0, {factors.begin(), factors.end()}, {}};
    for (auto n : factors) {
      cone.apex += n;
    }
    std::size_t offset = 0;
    for (auto n : factors) {
      NArrow pr{cone.apex, n, std::vector<std::size_t>(n)};
      for (std::size_t j = 0; j < n; ++j) {
        pr.pick[j] = offset + j;
      }
      offset += n;
      cone.projections.push_back(std::move(pr));
    }
    return cone;
  }

  TheoryN::Morphism TheoryN::pair(ProductCone<TheoryN> const& cone,
                                  std::span<Morphism const>   legs,
                                  Object const&               x) const {
    if (legs.size() != cone.factors.size()) {
      raise(Errc::no_mediator, "number of legs does not match the cone");
    }
    NArrow h{x, cone.apex, {}};
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (legs[i].source != x || legs[i].target != cone.factors[i]) {
        raise(Errc::no_mediator, "legs do not form a cone over the factors");
      }
      h.pick.insert(h.pick.end(), legs[i].pick.begin(), legs[i].pick.end());
    }
    // a foreign cone over the same factors: find the mediator by search
    if (!(cone == product(cone.factors))) {
      return search_mediator(*this, cone, {legs.begin(), legs.end()}, x);
    }
    return h;
  }

  std::string TheoryN::render(Morphism const& f) const {
    std::string s = "(";
    for (std::size_t j = 0; j < f.pick.size(); ++j) {
      s += (j ? "," : "") + std::string("x") + std::to_string(f.pick[j]);
    }
    return s + ")";
  }

  TheoryN build_theory_n(std::size_t K) {
    if (K == 0) {
      raise(Errc::invalid_argument, "the theory of sets needs K >= 1");
    }
    return TheoryN(K);
  }

}  // namespace structura
