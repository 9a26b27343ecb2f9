#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "structura/error.hpp"
#include "structura/fincat/adjunctions.hpp"
#include "structura/lawvere/builtins.hpp"
#include "structura/transport/enumerate.hpp"
#include "structura/transport/lifted.hpp"
#include "structura/transport/verify.hpp"

using namespace structura;

namespace {
  Space sierpinski() {
    std::vector<std::pair<Point, Point>> order{{0, 1}};
    return Space::from_order(2, order);
  }

  Space two_chains() {
    std::vector<std::pair<Point, Point>> order{{0, 1}, {2, 3}};
    return Space::from_order(4, order);
  }

  template <class Cat>
  StructuredObject<Cat> make(Cat const& cat, Presentation const& p, typename Cat::Object c,
                             oracle::Tables tables) {
    return structure_from_algebra(cat, p, c, FinAlgebra(p.signature(), cat.points(c), std::move(tables)));
  }

  template <class Cat>
  oracle::Tables tables(StructuredObject<Cat> const& s) {
    oracle::Tables out;
    for (auto const& f : s.interpretation) {
      out.push_back(f.image);
    }
    return out;
  }

  Presentation const monoid = builtin_presentation("monoid");
  Presentation const empty_theory("empty", Signature(), {});

  Errc code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  }
}  // namespace

TEST_CASE("enumeration of structures") {
  FinSet const set;
  FinTop const top;
  auto const   groups = enumerate_structures(builtin_presentation("group"), std::size_t{2}, set);
  CHECK(groups.size() == 2);
  CHECK(groups.size() == oracle::models(builtin_presentation("group"), 2).size());

  auto const on_s = enumerate_structures(monoid, sierpinski(), top);
  CHECK(on_s.size() == 2);
  bool has_or = false;
  for (auto const& s : on_s) {
    has_or = has_or || tables(s) == oracle::Tables{{0, 1, 1, 1}, {0}};
  }
  CHECK(has_or);

  auto const magma = builtin_presentation("magma");
  CHECK(enumerate_structures(magma, std::size_t{0}, set).size() == 1);
  CHECK(enumerate_structures(empty_theory, Space::discrete(3), top).size() == 1);

  SearchBounds small;
  small.max_carrier = 3;
  CHECK(code_of([&] { enumerate_structures(monoid, std::size_t{4}, set, small); }) == Errc::bound_exceeded);
}

TEST_CASE("lifting requires a product preserving left adjoint") {
  FinSet const set;
  auto         adj = identity_adjunction(set);
  adj.left.on_object   = [](std::size_t) { return std::size_t{2}; };
  adj.left.on_morphism = [&](Arrow<std::size_t> const&) { return set.identity(2); };
  CHECK(code_of([&] { lift_adjunction(adj, monoid); }) == Errc::not_product_preserving);
}

TEST_CASE("the identity adjunction lifts to the identity") {
  FinTop const top;
  auto const   l  = lift_adjunction(identity_adjunction(top), monoid);
  auto const   ss = enumerate_structures(monoid, sierpinski(), top);
  for (auto const& a : ss) {
    CHECK(tables(l.left(a)) == tables(a));
    for (auto const& b : ss) {
      for (auto const& f : structure_homs(a, b)) {
        CHECK(l.alpha(a, f).base == f.base);
        CHECK(l.beta(f, b).base == f.base);
      }
    }
  }
}

TEST_CASE("ascent along the finite Stone-Cech unit") {
  FinTop const top;
  auto const   l   = lift_adjunction(make_beta_adjunction(), monoid);
  auto const   orm = make(top, monoid, sierpinski(), {{0, 1, 1, 1}, {0}});
  auto const   up  = ascend(orm, l);
  CHECK(up.structure.carrier == Space::discrete(1));
  CHECK(tables(up.structure) == oracle::Tables{{0}, {0}});
  CHECK(up.unit.base.image == std::vector<Point>{0, 0});
  CHECK(oracle::models(monoid, 1).size() == 1);
  CHECK(verify_unique_ascent(orm, l).passed());

  // alpha of the identity on F(C) is the unit
  LiftedMorphism<FinDisc> id{up.structure, up.structure, FinDisc{}.identity(up.structure.carrier)};
  CHECK(l.alpha(orm, id).base == make_beta_adjunction().unit(orm.carrier));

  // two Sierpinski components, each an OR-monoid, multiplied componentwise
  // (point 2c + s is (c, s)); the component set carries OR with P unit
  auto const x = two_chains();
  oracle::Tables t{{}, {0}};
  for (Point p = 0; p < 4; ++p) {
    for (Point q = 0; q < 4; ++q) {
      t[0].push_back(2 * ((p / 2) | (q / 2)) + ((p % 2) | (q % 2)));
    }
  }
  auto const two = make(top, monoid, x, t);
  REQUIRE(validate_structure(two, monoid).passed());
  auto const lifted = ascend(two, l);
  CHECK(tables(lifted.structure) == oracle::Tables{{0, 1, 1, 1}, {0}});

  // brute force: monoids on two points for which the component map is a
  // homomorphism
  std::vector<std::size_t> comp = oracle::components({4, x.relation()});
  std::vector<oracle::Tables> candidates;
  for (auto const& m : oracle::models(monoid, 2)) {
    if (oracle::is_homomorphism(monoid.signature(), comp, t, 4, m, 2)) {
      candidates.push_back(m);
    }
  }
  CHECK(candidates == std::vector<oracle::Tables>{{{0, 1, 1, 1}, {0}}});
  CHECK(verify_unique_ascent(two, l).passed());
}

TEST_CASE("ascent and descent with no operations") {
  FinTop const top;
  auto const   l   = lift_adjunction(make_beta_adjunction(), empty_theory);
  StructuredObject<FinTop> bare{top, empty_theory, two_chains(), {}};
  auto const   up  = ascend(bare, l);
  CHECK(up.structure.carrier == Space::discrete(2));
  CHECK(up.unit.base == make_beta_adjunction().unit(two_chains()));
  CHECK(verify_unique_ascent(bare, l).passed());

  auto const                dl   = lift_adjunction(make_discrete_forgetful_adjunction(), empty_theory);
  StructuredObject<FinTop>  top_bare{top, empty_theory, sierpinski(), {}};
  auto const                down = descend(top_bare, dl);
  CHECK(down.structure.carrier == 2);
  CHECK(down.counit.base == make_discrete_forgetful_adjunction().counit(sierpinski()));
  CHECK(verify_unique_descent(top_bare, dl).passed());
}

TEST_CASE("descent along the discrete-forgetful counit") {
  FinTop const top;
  auto const   l    = lift_adjunction(make_discrete_forgetful_adjunction(), monoid);
  auto const   orm  = make(top, monoid, sierpinski(), {{0, 1, 1, 1}, {0}});
  auto const   down = descend(orm, l);
  CHECK(down.structure.carrier == 2);
  CHECK(tables(down.structure) == tables(orm));
  CHECK(down.counit.source.carrier == Space::discrete(2));
  CHECK(tables(down.counit.source) == tables(orm));
  CHECK(verify_unique_descent(orm, l).passed());

  auto const group = builtin_presentation("group");
  auto const gl    = lift_adjunction(make_discrete_forgetful_adjunction(), group);
  auto const z2    = make(top, group, Space::discrete(2), {{0, 1, 1, 0}, {0}, {0, 1}});
  auto const gd    = descend(z2, gl);
  CHECK(tables(gd.structure) == tables(z2));
  CHECK(FinTop{}.inverse(gd.counit.base));
  auto const report = verify_unique_descent(z2, gl);
  CHECK(report.passed());
  CHECK(report.records().size() == 1);
}

TEST_CASE("empty carriers cannot carry constants") {
  FinTop const top;
  auto const   l = lift_adjunction(make_beta_adjunction(), monoid);
  StructuredObject<FinTop> nothing{top, monoid, Space::discrete(0), {}};
  CHECK(code_of([&] { ascend(nothing, l); }) == Errc::domain_error);
  auto const magma = builtin_presentation("magma");
  auto const ml    = lift_adjunction(make_beta_adjunction(), magma);
  auto const empty = enumerate_structures(magma, Space::discrete(0), top);
  REQUIRE(empty.size() == 1);
  CHECK(ascend(empty[0], ml).structure.carrier == Space::discrete(0));
}

TEST_CASE("forgetting lifted morphisms") {
  FinTop const top;
  auto const   l  = lift_adjunction(make_beta_adjunction(), monoid);
  auto const   ss = [&] {
    std::vector<StructuredObject<FinTop>> out;
    for (auto const& x : top.objects(2)) {
      for (auto const& s : enumerate_structures(monoid, x, top)) {
        out.push_back(s);
      }
    }
    return out;
  }();
  for (auto const& a : ss) {
    CHECK(forget_lifted(LiftedMorphism<FinTop>{a, a, top.identity(a.carrier)}) == top.identity(a.carrier));
    CHECK(forget_lifted(l.unit(a)) == l.base().unit(a.carrier));
    for (auto const& b : ss) {
      auto const homs = structure_homs(a, b);
      std::set<std::vector<Point>> bases;
      for (auto const& f : homs) {
        bases.insert(forget_lifted(f).image);
        // the square: forgetting commutes with F
        CHECK(forget_lifted(l.left(f)) == l.base().left(forget_lifted(f)));
        CHECK(l.left(f).source.carrier == l.base().left(a.carrier));
      }
      CHECK(bases.size() == homs.size());
    }
  }
}

TEST_CASE("transposition on small structures") {
  FinTop const top;
  auto const   l = lift_adjunction(make_beta_adjunction(), monoid);
  std::vector<StructuredObject<FinTop>>  lower;
  std::vector<StructuredObject<FinDisc>> upper;
  for (auto const& x : top.objects(2)) {
    for (auto const& s : enumerate_structures(monoid, x, top)) {
      lower.push_back(s);
    }
  }
  for (auto const& d : FinDisc{}.objects(2)) {
    for (auto const& s : enumerate_structures(monoid, d, FinDisc{})) {
      upper.push_back(s);
    }
  }
  auto const report = check_lifted_adjunction(l, lower, upper);
  CHECK(report.passed());
  CHECK(report.checked() > 100);
}

TEST_CASE("the uniqueness sweep counts isomorphisms") {
  FinTop const top;
  auto const   l   = lift_adjunction(make_beta_adjunction(), monoid);
  auto const   orm = make(top, monoid, sierpinski(), {{0, 1, 1, 1}, {0}});
  auto const   report = verify_unique_ascent(orm, l);
  REQUIRE(report.records().size() == 1);
  CHECK(report.records()[0].witness == "isos=1 base-id=1");
}
