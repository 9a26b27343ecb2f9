#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "structura/error.hpp"
#include "structura/fincat/category.hpp"
#include "structura/fincat/space.hpp"

namespace structura {

  // A point map between two objects.  Equality is extensional: same domain,
  // codomain and images.
  template <class Obj>
  struct Arrow {
    Obj                dom;
    Obj                cod;
    std::vector<Point> image;

    Point operator()(Point p) const {
      return image[p];
    }

    friend bool operator==(Arrow const&, Arrow const&)                  = default;
    friend std::strong_ordering operator<=>(Arrow const&, Arrow const&) = default;
  };

  // Hooks used by PointMapCategory: starting from an object, how many points
  // it has, its preorder, and its canonical product.
  inline std::size_t point_count(std::size_t n) noexcept {
    return n;
  }
  inline bool point_leq(std::size_t, Point a, Point b) noexcept {
    return a == b;
  }
  inline std::size_t product_object(std::span<std::size_t const> factors) {
    std::size_t n = 1;
    for (auto f : factors) {
      n *= f;
    }
    return n;
  }
  inline std::size_t point_count(Space const& s) noexcept {
    return s.size();
  }
  inline bool point_leq(Space const& s, Point a, Point b) {
    return s.leq(a, b);
  }
  inline Space product_object(std::span<Space const> factors) {
    return product_space(factors);
  }

  // Categories of finite objects whose morphisms are the order-preserving
  // point maps.  FinSet (objects are cardinalities, the order is equality)
  // and FinTop (objects are preorders) are the two instances.  Products are
  // cartesian, row-major in the factors.
  template <class Obj>
  class PointMapCategory {
   public:
    using Object   = Obj;
    using Morphism = Arrow<Obj>;

    Object dom(Morphism const& f) const {
      return f.dom;
    }
    Object cod(Morphism const& f) const {
      return f.cod;
    }
    std::size_t points(Object const& a) const {
      return point_count(a);
    }
    bool leq(Object const& a, Point p, Point q) const {
      return point_leq(a, p, q);
    }

    Morphism identity(Object const& a) const {
      std::vector<Point> image(points(a));
      for (Point p = 0; p < image.size(); ++p) {
        image[p] = p;
      }
      return {a, a, std::move(image)};
    }

    // g . f; throws InvalidArgument unless cod(f) == dom(g).
    Morphism compose(Morphism const& g, Morphism const& f) const {
      if (!(f.cod == g.dom)) {
        raise(Errc::invalid_argument, "composite of non-composable maps");
      }
      std::vector<Point> image(f.image.size());
      for (Point p = 0; p < image.size(); ++p) {
        image[p] = g.image[f.image[p]];
      }
      return {f.dom, g.cod, std::move(image)};
    }

    bool equal(Morphism const& f, Morphism const& g) const {
      return f == g;
    }

    // Points p <= q whose images are out of order, if any.
    std::optional<std::pair<Point, Point>> monotonicity_witness(Morphism const& f) const {
      for (Point p = 0; p < f.image.size(); ++p) {
        for (Point q = 0; q < f.image.size(); ++q) {
          if (p != q && leq(f.dom, p, q) && !leq(f.cod, f.image[p], f.image[q])) {
            return std::pair{p, q};
          }
        }
      }
      return std::nullopt;
    }

    bool is_morphism(Morphism const& f) const {
      if (f.image.size() != points(f.dom)) {
        return false;
      }
      for (auto v : f.image) {
        if (v >= points(f.cod)) {
          return false;
        }
      }
      return !monotonicity_witness(f).has_value();
    }

    // Throws InvalidArgument if the data is not a morphism.
    Morphism make(Object const& dom, Object const& cod, std::vector<Point> image) const {
      Morphism f{dom, cod, std::move(image)};
      if (!is_morphism(f)) {
        raise(Errc::invalid_argument, "point map " + render(f) + " is not a morphism");
      }
      return f;
    }

    std::optional<Morphism> inverse(Morphism const& f) const {
      auto const n = points(f.dom);
      if (n != points(f.cod)) {
        return std::nullopt;
      }
      std::vector<Point> image(n, n);
      for (Point p = 0; p < n; ++p) {
        if (f.image[p] >= n || image[f.image[p]] != n) {
          return std::nullopt;
        }
        image[f.image[p]] = p;
      }
      Morphism g{f.cod, f.dom, std::move(image)};
      if (!is_morphism(g)) {
        return std::nullopt;
      }
      return g;
    }

    // All morphisms a -> b in lexicographic order of their images.
    std::vector<Morphism> hom(Object const& a, Object const& b) const {
      std::vector<Morphism> result;
      auto const            n = points(a);
      auto const            m = points(b);
      std::vector<Point>    image(n, 0);
      if (n > 0 && m == 0) {
        return result;
      }
      auto consistent = [&](Point p) {
        for (Point q = 0; q < p; ++q) {
          if ((leq(a, q, p) && !leq(b, image[q], image[p]))
              || (leq(a, p, q) && !leq(b, image[p], image[q]))) {
            return false;
          }
        }
        return true;
      };
      // iterative depth-first search over images
      std::size_t p = 0;
      if (n == 0) {
        result.push_back({a, b, {}});
        return result;
      }
      image[0] = 0;
      while (true) {
        if (consistent(p)) {
          if (p + 1 == n) {
            result.push_back({a, b, image});
          } else {
            image[++p] = 0;
            continue;
          }
        }
        while (++image[p] == m) {
          if (p == 0) {
            return result;
          }
          --p;
        }
      }
    }

    ProductCone<PointMapCategory> product(std::span<Object const> factors) const {
      ProductCone<PointMapCategory> cone{product_object(factors),
                                         {factors.begin(), factors.end()},
                                         {}};
      auto const                    n = points(cone.apex);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        std::size_t stride = 1;
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
          stride *= points(factors[j]);
        }
        std::vector<Point> image(n);
        for (Point p = 0; p < n; ++p) {
          image[p] = (p / stride) % points(factors[i]);
        }
        cone.projections.push_back({cone.apex, factors[i], std::move(image)});
      }
      return cone;
    }

    // The mediating morphism x |-> (legs_i(x)) out of x.  Throws NoMediator
    // if the legs do not match the cone, NonUniqueMediator if the cone is not
    // a product witness.
    Morphism pair(ProductCone<PointMapCategory> const& cone,
                  std::span<Morphism const>            legs,
                  Object const&                        x) const {
      if (legs.size() != cone.projections.size()) {
        raise(Errc::no_mediator, "number of legs does not match the cone");
      }
      for (std::size_t i = 0; i < legs.size(); ++i) {
        if (!(legs[i].cod == cone.factors[i]) || !(legs[i].dom == x)) {
          raise(Errc::no_mediator, "legs do not form a cone over the factors");
        }
      }
      std::map<std::vector<Point>, Point> point_of;
      for (Point p = 0; p < points(cone.apex); ++p) {
        std::vector<Point> coords;
        for (auto const& pr : cone.projections) {
          coords.push_back(pr.image[p]);
        }
        if (!point_of.emplace(std::move(coords), p).second) {
          raise(Errc::non_unique_mediator,
                "cone projections are not jointly injective");
        }
      }
      std::vector<Point> image(points(x));
      for (Point p = 0; p < image.size(); ++p) {
        std::vector<Point> coords;
        for (auto const& leg : legs) {
          coords.push_back(leg.image[p]);
        }
        auto it = point_of.find(coords);
        if (it == point_of.end()) {
          raise(Errc::no_mediator, "no apex point over the given coordinates");
        }
        image[p] = it->second;
      }
      Morphism h{x, cone.apex, std::move(image)};
      if (!is_morphism(h)) {
        raise(Errc::no_mediator, "mediating map " + render(h) + " is not a morphism");
      }
      return h;
    }

    std::string render(Morphism const& f) const {
      std::string s = "[";
      for (std::size_t p = 0; p < f.image.size(); ++p) {
        s += (p ? "," : "") + std::to_string(f.image[p]);
      }
      return s + "]";
    }

  };

  class FinSet : public PointMapCategory<std::size_t> {
   public:
    using PointMapCategory::render;
    static constexpr std::string_view name = "FinSet";

    std::string render(Object const& n) const {
      return "Set(" + std::to_string(n) + ")";
    }
    // Sets with 0..max_points elements.
    std::vector<Object> objects(std::size_t max_points) const;
    bool                contains(Object const&) const {
      return true;
    }
  };

  class FinTop : public PointMapCategory<Space> {
   public:
    using PointMapCategory::render;
    static constexpr std::string_view name = "FinTop";

    std::string render(Object const& s) const {
      return to_string(s);
    }
    // Every preorder on 0..max_points points.
    std::vector<Object> objects(std::size_t max_points) const;
    bool                contains(Object const&) const {
      return true;
    }
  };

  // Full subcategory of FinTop on the discrete spaces; the finite compact
  // Hausdorff spaces.  It is closed under finite products.
  class FinDisc : public FinTop {
   public:
    static constexpr std::string_view name = "FinDisc";

    std::vector<Object> objects(std::size_t max_points) const;
    bool                contains(Object const& s) const {
      return s.is_discrete();
    }
  };

}  // namespace structura
