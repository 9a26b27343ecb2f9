#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "structura/error.hpp"
#include "structura/fincat/adjunctions.hpp"
#include "structura/fincat/finite.hpp"

using namespace structura;

namespace {
  Space sierpinski() {
    std::vector<std::pair<Point, Point>> order{{0, 1}};
    return Space::from_order(2, order);
  }

  oracle::Relation relation_of(Space const& s) {
    return {s.size(), s.relation()};
  }

  std::vector<Space> spaces_up_to(std::size_t n) {
    return FinTop{}.objects(n);
  }

  template <class Cat>
  void check_product_laws(Cat const& cat, std::vector<typename Cat::Object> const& objects) {
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        auto cone = product(cat, {a, b});
        REQUIRE(cone.projections.size() == 2);
        CHECK(cat.equal(pair(cat, cone, cone.projections, cone.apex), cat.identity(cone.apex)));
        for (auto const& x : objects) {
          for (auto const& f : cat.hom(x, a)) {
            for (auto const& g : cat.hom(x, b)) {
              std::vector legs{f, g};
              auto        h = pair(cat, cone, legs, x);
              CHECK(cat.is_morphism(h));
              CHECK(cat.equal(cat.compose(cone.projections[0], h), f));
              CHECK(cat.equal(cat.compose(cone.projections[1], h), g));
              CHECK(cat.equal(h, search_mediator(cat, cone, legs, x)));
            }
          }
        }
      }
    }
  }
}  // namespace

TEST_CASE("FinSet products") {
  FinSet const set;
  auto         cone = product(set, {std::size_t{2}, std::size_t{3}});
  CHECK(cone.apex == 6);
  CHECK(cone.projections[0].image == std::vector<Point>{0, 0, 0, 1, 1, 1});
  CHECK(cone.projections[1].image == std::vector<Point>{0, 1, 2, 0, 1, 2});

  auto terminal = product(set, {});
  CHECK(terminal.apex == 1);
  CHECK(terminal.projections.empty());
  auto bang = pair(set, terminal, {}, std::size_t{3});
  CHECK(bang.image == std::vector<Point>{0, 0, 0});

  auto f = set.make(2, 2, {1, 0});
  auto g = set.make(2, 3, {2, 2});
  auto h = pair(set, cone, {f, g}, std::size_t{2});
  CHECK(h.image == std::vector<Point>{5, 2});

  auto objects = set.objects(3);
  auto tests   = set.objects(2);
  for (auto const& list : small_factor_lists(objects)) {
    CHECK(is_universal_cone(set, product(set, list), std::span<std::size_t const>(tests)));
  }
}

TEST_CASE("FinTop products use the componentwise order") {
  FinTop const top;
  auto         s    = sierpinski();
  auto         cone = product(top, {s, s});
  CHECK(cone.apex.size() == 4);
  CHECK(cone.apex.relation_pairs() == 9);
  std::size_t above = 0;
  for (Point p = 1; p < 4; ++p) {
    above += cone.apex.leq(0, p);
  }
  CHECK(above == 3);
  auto tests = top.objects(2);
  CHECK(is_universal_cone(top, cone, std::span<Space const>(tests)));
}

TEST_CASE("pairing satisfies the product laws") {
  check_product_laws(FinSet{}, FinSet{}.objects(2));
  check_product_laws(FinTop{}, spaces_up_to(2));
}

TEST_CASE("pairing rejects cones that do not fit") {
  FinSet const set;
  auto         cone = product(set, {std::size_t{2}, std::size_t{2}});
  auto         f    = set.identity(2);
  auto code = [&](auto&& run) {
    try {
      run();
    } catch (Error const& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  };
  CHECK(code([&] { pair(set, cone, {f}, std::size_t{2}); }) == Errc::no_mediator);
  CHECK(code([&] { pair(set, cone, {f, set.identity(3)}, std::size_t{2}); }) == Errc::no_mediator);
  auto broken                  = cone;
  broken.projections[0].image  = {0, 0, 0, 0};
  CHECK(code([&] { pair(set, broken, {f, f}, std::size_t{2}); }) == Errc::non_unique_mediator);
}

TEST_CASE("continuity is monotonicity") {
  FinTop const top;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& x : spaces_up_to(3)) {
      if (x.size() != n) {
        continue;
      }
      auto const rel = relation_of(x);
      for (std::size_t arity = 0; arity <= 2; ++arity) {
        auto       source  = power(top, x, arity).apex;
        auto const s_opens = oracle::power_opens(rel, arity);
        auto const t_opens = oracle::opens(rel);
        // all point maps, continuous or not
        std::size_t total = 1;
        for (std::size_t k = 0; k < source.size(); ++k) {
          total *= n;
        }
        for (std::size_t k = 0; k < total; ++k) {
          std::vector<Point> image(source.size());
          for (std::size_t j = image.size(), r = k; j-- > 0; r /= n) {
            image[j] = r % n;
          }
          Arrow<Space> f{source, x, image};
          CHECK(top.is_morphism(f) == oracle::continuous(image, s_opens, t_opens));
        }
      }
    }
  }
}

TEST_CASE("preorders are enumerated exactly once") {
  for (std::size_t n = 0; n <= 3; ++n) {
    std::set<std::vector<bool>> ours, theirs;
    for (auto const& s : all_spaces(n)) {
      ours.insert(s.relation());
    }
    for (auto const& r : oracle::preorders(n)) {
      theirs.insert(r.le);
    }
    CHECK(all_spaces(n).size() == theirs.size());
    CHECK(ours == theirs);
  }
  CHECK(all_spaces(3).size() == 29);
}

TEST_CASE("connected components") {
  CHECK(pi0(sierpinski()).size() == 1);
  CHECK(pi0(Space::discrete(3)).size() == 3);
  std::vector<std::pair<Point, Point>> two_chains{{0, 1}, {2, 3}};
  auto c = pi0(Space::from_order(4, two_chains));
  CHECK(c == std::vector<std::vector<Point>>{{0, 1}, {2, 3}});
  for (auto const& x : spaces_up_to(3)) {
    CHECK(component_index(x) == oracle::components(relation_of(x)));
  }
}

TEST_CASE("components are functorial") {
  FinTop const top;
  auto const   beta = beta_functor();
  auto const   sample = spaces_up_to(3);
  for (auto const& x : sample) {
    for (auto const& y : sample) {
      auto hxy = top.hom(x, y);
      if (hxy.empty()) {
        continue;
      }
      for (auto const& z : spaces_up_to(2)) {
        for (auto const& g : top.hom(y, z)) {
          for (auto const& f : hxy) {
            CHECK(beta(top.compose(g, f)) == top.compose(beta(g), beta(f)));
          }
        }
      }
    }
  }
}

TEST_CASE("product preservation") {
  FinSet const set;
  FinTop const top;
  auto const   spaces = spaces_up_to(2);
  auto const   sets   = set.objects(3);
  auto const   lists  = small_factor_lists(spaces);
  CHECK(is_product_preserving(forgetful_functor(), std::span(lists), std::span(sets)));
  CHECK(is_product_preserving(identity_functor(top), std::span(lists), std::span(spaces)));

  Functor<FinSet, FinSet> constant{set, set, "two",
                                   [](std::size_t) { return std::size_t{2}; },
                                   [&](Arrow<std::size_t> const&) { return set.identity(2); }};
  std::vector<std::vector<std::size_t>> empty{{}};
  CHECK_FALSE(is_product_preserving(constant, std::span(empty), std::span(sets)));

  auto const set_lists = small_factor_lists(set.objects(2));
  CHECK(is_product_preserving(discrete_functor(), std::span(set_lists), std::span(spaces)));
  auto const disc = FinDisc{}.objects(3);
  CHECK(is_product_preserving(beta_functor(), std::span(lists), std::span(disc)));
}

TEST_CASE("components of a product") {
  auto const spaces = spaces_up_to(3);
  for (auto const& x : spaces) {
    for (auto const& y : spaces) {
      std::vector factors{x, y};
      auto        xy = product_space(factors);
      CHECK(oracle::component_count(relation_of(xy))
            == oracle::component_count(relation_of(x)) * oracle::component_count(relation_of(y)));
    }
  }
}

TEST_CASE("the discrete-forgetful adjunction") {
  auto const adj  = make_discrete_forgetful_adjunction();
  auto const eps  = adj.counit(sierpinski());
  CHECK(eps.dom == Space::discrete(2));
  CHECK(eps.image == std::vector<Point>{0, 1});
  CHECK(FinTop{}.is_morphism(eps));
  CHECK_FALSE(FinTop{}.inverse(eps));
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(FinSet{}.inverse(adj.unit(n)));
  }

  auto const sets   = FinSet{}.objects(3);
  auto const spaces = spaces_up_to(3);
  CHECK(check_adjunction(adj, std::span(sets), std::span(spaces)).passed());
  for (auto s : sets) {
    for (auto const& x : spaces) {
      auto const expected = oracle::count_functions(s, x.size());
      CHECK(FinTop{}.hom(adj.left(s), x).size() == expected);
      CHECK(FinSet{}.hom(s, adj.right(x)).size() == expected);
    }
  }
}

TEST_CASE("the finite Stone-Cech adjunction") {
  auto const adj = make_beta_adjunction();
  CHECK(adj.left(sierpinski()) == Space::discrete(1));
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(adj.left(Space::discrete(n)) == Space::discrete(n));
    CHECK(FinTop{}.inverse(adj.unit(Space::discrete(n))));
  }
  auto const spaces = spaces_up_to(3);
  auto const disc   = FinDisc{}.objects(3);
  CHECK(check_adjunction(adj, std::span(spaces), std::span(disc)).passed());
  for (auto const& x : spaces) {
    CHECK(adj.left(x).size() == oracle::component_count(relation_of(x)));
    for (auto const& d : disc) {
      CHECK(FinTop{}.hom(adj.left(x), d).size() == FinTop{}.hom(x, adj.right(d)).size());
    }
  }
  CHECK(check_adjunction(identity_adjunction(FinTop{}), std::span(spaces), std::span(spaces)).passed());
}

TEST_CASE("a corrupted counit is reported at the object where it breaks") {
  auto adj          = make_beta_adjunction();
  auto good         = adj.counit.component;
  adj.counit.component = [good](Space const& d) {
    auto e = good(d);
    if (d.size() == 2) {
      std::swap(e.image[0], e.image[1]);
    }
    return e;
  };
  auto const spaces = spaces_up_to(2);
  auto const disc   = FinDisc{}.objects(2);
  auto const report = check_adjunction(adj, std::span(spaces), std::span(disc));
  REQUIRE_FALSE(report.passed());
  bool named = false;
  for (auto const& r : report.failures()) {
    named = named || r.subject.find("Space(2)") != std::string::npos;
  }
  CHECK(named);
}

TEST_CASE("finite Hausdorff spaces are the discrete ones") {
  // A space is Hausdorff when distinct points have disjoint open
  // neighbourhoods; with up-sets as opens that forces the order to be
  // trivial.
  for (auto const& x : spaces_up_to(3)) {
    auto const opens = oracle::opens(relation_of(x));
    bool       hausdorff = true;
    for (Point a = 0; a < x.size(); ++a) {
      for (Point b = a + 1; b < x.size(); ++b) {
        bool separated = false;
        for (auto u : opens) {
          for (auto v : opens) {
            separated = separated || ((u >> a & 1) && (v >> b & 1) && (u & v) == 0);
          }
        }
        hausdorff = hausdorff && separated;
      }
    }
    CHECK(hausdorff == x.is_discrete());
    CHECK(FinDisc{}.contains(x) == hausdorff);
  }
}
