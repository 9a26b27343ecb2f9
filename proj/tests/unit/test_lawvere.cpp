#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "oracles.hpp"
#include "structura/equational/model_search.hpp"
#include "structura/equational/term_enum.hpp"
#include "structura/error.hpp"
#include "structura/fincat/finite.hpp"
#include "structura/lawvere/builtins.hpp"
#include "structura/lawvere/lawvere_theory.hpp"
#include "structura/lawvere/structure.hpp"
#include "structura/lawvere/theory_n.hpp"
#include "structura/transport/enumerate.hpp"

using namespace structura;

namespace {
  Term v(std::size_t i) {
    return Term::var(i);
  }
  Term app(std::string f, std::vector<Term> args = {}) {
    return Term::app(std::move(f), std::move(args));
  }

  Space sierpinski() {
    std::vector<std::pair<Point, Point>> order{{0, 1}};
    return Space::from_order(2, order);
  }

  template <class Cat>
  StructuredObject<Cat> make(Cat const& cat, std::string const& theory, typename Cat::Object c,
                             oracle::Tables tables) {
    auto const p = builtin_presentation(theory);
    return structure_from_algebra(cat, p, c, FinAlgebra(p.signature(), cat.points(c), std::move(tables)));
  }

  Errc code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  }

  // Tables of a witness model with its size.
  using Witness = std::pair<oracle::Tables, std::size_t>;

  std::vector<Witness> separating_models(std::string const& name) {
    auto const           p = builtin_presentation(name);
    std::vector<Witness> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& a : enumerate_algebras(p, n)) {
        out.push_back({a.tables(), n});
      }
    }
    if (name == "monoid") {
      out.push_back({oracle::full_transformation_monoid_2(), 4});
    } else if (name == "group") {
      out.push_back({oracle::cyclic_group(4), 4});
      out.push_back({oracle::cyclic_group(5), 5});
      out.push_back({oracle::symmetric_group(3), 6});
      out.push_back({oracle::symmetric_group(4), 24});
    } else if (name == "abelian-group") {
      out.push_back({oracle::cyclic_group(4), 4});
      out.push_back({oracle::cyclic_group(5), 5});
    } else if (name == "ring") {
      out.push_back({oracle::integers_mod(4), 4});
      out.push_back({oracle::integers_mod(5), 5});
      out.push_back({oracle::upper_triangular(2), 8});
      out.push_back({oracle::upper_triangular(3), 27});
    }
    return out;
  }

  bool separated(Presentation const& p, Term const& s, Term const& t, std::vector<Witness> const& models) {
    auto const m = std::max(s.variable_bound(), t.variable_bound());
    for (auto const& [tables, n] : models) {
      std::size_t total = 1;
      for (std::size_t k = 0; k < m; ++k) {
        total *= n;
      }
      for (std::size_t k = 0; k < total; ++k) {
        auto asg = tuple_at(k, m, n);
        if (oracle::eval(s, p.signature(), tables, n, asg) != oracle::eval(t, p.signature(), tables, n, asg)) {
          return true;
        }
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("the theory of sets") {
  TheoryN const n(4);
  for (std::size_t a = 0; a <= 4; ++a) {
    for (std::size_t b = 0; b <= 4; ++b) {
      CHECK(n.hom(a, b).size() == oracle::count_functions(b, a));
    }
    CHECK(n.hom(a, 0).size() == 1);
  }
  CHECK(n.hom(2, 3).size() == 8);
  auto cone = product(n, {std::size_t{2}, std::size_t{3}});
  CHECK(cone.apex == 5);
  CHECK(cone.projections[0].pick == std::vector<std::size_t>{0, 1});
  CHECK(cone.projections[1].pick == std::vector<std::size_t>{2, 3, 4});
  auto const tests = n.objects(3);
  for (auto const& list : small_factor_lists(n.objects(2))) {
    CHECK(is_universal_cone(n, product(n, list), std::span(tests)));
  }
  CHECK(code_of([] { build_theory_n(0); }) == Errc::invalid_argument);
}

TEST_CASE("the theory of sets is a category") {
  TheoryN const n(3);
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      for (auto const& f : n.hom(a, b)) {
        CHECK(n.compose(f, n.identity(a)) == f);
        CHECK(n.compose(n.identity(b), f) == f);
        for (std::size_t c = 0; c <= 2; ++c) {
          for (auto const& g : n.hom(b, c)) {
            for (std::size_t d = 0; d <= 2; ++d) {
              for (auto const& h : n.hom(c, d)) {
                CHECK(n.compose(h, n.compose(g, f)) == n.compose(n.compose(h, g), f));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("the theory of monoids") {
  auto const p = builtin_presentation("monoid");
  auto const t = build_lawvere_theory(p, select_oracle(p, false));
  CHECK(t.oracle().name() == "monoid");
  CHECK(t.hom(2, 1, 3).size() == 15);
  auto closed = t.hom(0, 1, 3);
  REQUIRE(closed.size() == 1);
  CHECK(to_string(closed[0]) == "e");
  for (std::size_t m = 0; m <= 3; ++m) {
    CHECK(t.hom(m, 0).size() == 1);
  }
  // composite of m(x0, x1) with (x1, e) is x1
  auto mul = t.basic("m");
  auto u   = TermTuple{1, {v(0), app("e")}};
  CHECK(t.compose(mul, u) == t.identity(1));
}

TEST_CASE("the theory functor") {
  for (auto const& name : {"monoid", "group", "ring"}) {
    auto const p  = builtin_presentation(name);
    auto const t  = build_lawvere_theory(p, select_oracle(p, false), 0, 1);
    auto const tf = theory_functor(t);
    for (std::size_t k = 0; k <= 3; ++k) {
      CHECK(tf(k) == k);
    }
    auto const objects = tf.source.objects(3);
    auto const lists   = small_factor_lists(tf.source.objects(2));
    CHECK(product_preservation_report(tf, std::span(lists), std::span(objects)).passed());
    auto const sample = tf.source.objects(2);
    CHECK(check_functor(tf, std::span(sample)).passed());
  }
}

TEST_CASE("composition in a theory is associative") {
  auto const p = builtin_presentation("group");
  auto const t = build_lawvere_theory(p, select_oracle(p, false));
  for (auto const& f : t.hom(2, 2, 2)) {
    for (auto const& g : t.hom(2, 1, 2)) {
      for (auto const& h : t.hom(1, 2, 2)) {
        CHECK(t.compose(h, t.compose(g, f)) == t.compose(t.compose(h, g), f));
      }
    }
  }
}

TEST_CASE("shipped oracles") {
  auto group = select_oracle(builtin_presentation("group"), false);
  CHECK(group->normalize(app("m", {v(0), app("i", {v(0)})})) == app("e"));
  CHECK(group->normalize(app("i", {app("m", {v(0), v(1)})}))
        == app("m", {app("i", {v(1)}), app("i", {v(0)})}));

  auto ring = select_oracle(builtin_presentation("ring"), false);
  CHECK(ring->equal(app("mul", {app("add", {v(0), v(1)}), v(2)}),
                    app("add", {app("mul", {v(0), v(2)}), app("mul", {v(1), v(2)})})));
  CHECK_FALSE(ring->equal(app("mul", {v(0), v(1)}), app("mul", {v(1), v(0)})));
  CHECK(ring->equal(app("mul", {app("zero"), v(0)}), app("zero")));

  for (auto const& name : builtin_theory_names()) {
    auto const p = builtin_presentation(name);
    auto const o = select_oracle(p, false);
    CHECK(o->complete());
    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
      auto t = random_term(p.signature(), 3, 7, rng);
      CHECK(o->normalize(o->normalize(t)) == o->normalize(t));
    }
  }
}

TEST_CASE("normal forms are sound in small models") {
  for (auto const& name : {"monoid", "comm-monoid", "group", "abelian-group", "ring"}) {
    auto const p      = builtin_presentation(name);
    auto const o      = select_oracle(p, false);
    auto const models = separating_models(name);
    std::mt19937 rng(5);
    for (int k = 0; k < 150; ++k) {
      auto s = random_term(p.signature(), 2, 6, rng);
      auto n = o->normalize(s);
      CAPTURE(name, to_string(s), to_string(n));
      CHECK_FALSE(separated(p, s, n, models));
    }
  }
}

TEST_CASE("distinct normal forms are separated by a finite model") {
  // Models of size at most 3 suffice for commutative monoids only: every
  // group and every ring with at most 3 elements is commutative.  The
  // remaining theories get a few larger witnesses.
  for (auto const& name : {"monoid", "comm-monoid", "group", "abelian-group", "ring"}) {
    auto const p      = builtin_presentation(name);
    auto const o      = select_oracle(p, false);
    auto const models = separating_models(name);
    std::map<Term, Term> forms;
    for (auto const& t : terms_up_to(p.signature(), 2, 4)) {
      forms.emplace(o->normalize(t), t);
    }
    std::vector<Term> reps;
    for (auto const& [n, t] : forms) {
      reps.push_back(n);
    }
    std::size_t unseparated = 0;
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (std::size_t b = a + 1; b < reps.size(); ++b) {
        unseparated += !separated(p, reps[a], reps[b], models);
      }
    }
    CAPTURE(name, reps.size());
    CHECK(unseparated == 0);
  }
}

TEST_CASE("oracle validation") {
  auto const monoid = builtin_presentation("monoid");
  CHECK(code_of([&] { validate_oracle(monoid, *free_term_eq()); }) == Errc::oracle_unsound);
  CHECK(code_of([&] { validate_oracle(monoid, *comm_monoid_term_eq("m", "e")); }) == Errc::oracle_unsound);
  CHECK(code_of([&] { build_lawvere_theory(monoid, comm_monoid_term_eq("m", "e")); }) == Errc::oracle_unsound);
  CHECK(oracle_mismatch(monoid, *monoid_term_eq("m", "e")) == std::nullopt);

  for (auto const& name : builtin_theory_names()) {
    auto const o = select_oracle(builtin_presentation(name), false);
    CHECK((o->name() == name || o->name() == "free"));
  }

  Presentation band("band", Signature({{"m", 2}}), {Identity(1, app("m", {v(0), v(0)}), v(0))});
  CHECK(code_of([&] { select_oracle(band, false); }) == Errc::oracle_unsound);
  auto bounded = select_oracle(band, true);
  CHECK(bounded->name() == "bounded-semantic");
  CHECK_FALSE(bounded->complete());
  CHECK(bounded->equal(app("m", {v(0), v(0)}), v(0)));
}

TEST_CASE("interpretation of terms") {
  FinSet const set;
  auto const   z2 = make(set, "group", std::size_t{2}, {{0, 1, 1, 0}, {0}, {0, 1}});
  CHECK(interpret(v(0), z2, 1) == set.identity(2));
  CHECK(interpret(app("m", {v(0), v(1)}), z2, 2).image == std::vector<Point>{0, 1, 1, 0});
  CHECK(interpret(app("e"), z2, 0) == z2.op("e"));
  // x1 in context 2 is the second projection
  CHECK(interpret(v(1), z2, 2).image == std::vector<Point>{0, 1, 0, 1});
}

TEST_CASE("validation of structures") {
  FinTop const top;
  auto const   s   = sierpinski();
  auto const   orm = make(top, "monoid", s, {{0, 1, 1, 1}, {0}});
  CHECK(validate_structure(orm, orm.theory).passed());

  auto const xor_group = make(top, "group", s, {{0, 1, 1, 0}, {0}, {0, 1}});
  auto const report    = validate_structure(xor_group, xor_group.theory);
  REQUIRE_FALSE(report.passed());
  CHECK(report.failures()[0].subject.find("'m' is not a morphism") != std::string::npos);

  auto const one   = Space::discrete(1);
  auto const trivial = make(top, "ring", one, {{0}, {0}, {0}, {0}, {0}});
  CHECK(validate_structure(trivial, trivial.theory).passed());

  // a valid signature but a failing identity
  auto const right_zero = make(top, "monoid", s, {{0, 1, 0, 1}, {0}});
  auto const failing    = validate_structure(right_zero, right_zero.theory);
  REQUIRE(failing.failed() == 1);
  CHECK(failing.failures()[0].witness.find("[") != std::string::npos);
}

TEST_CASE("structures as functors") {
  FinSet const set;
  auto const   p  = builtin_presentation("group");
  auto const   t  = build_lawvere_theory(p, select_oracle(p, false));
  auto const   z2 = make(set, "group", std::size_t{2}, {{0, 1, 1, 0}, {0}, {0, 1}});
  auto const   a  = structure_to_functor(z2, t);
  CHECK(a(std::size_t{1}) == 2);
  CHECK(a(t.basic("m")).image == std::vector<Point>{0, 1, 1, 0});
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(a(t.identity(n)) == set.identity(a(n)));
  }
  auto const back = functor_to_structure(a);
  CHECK(back.carrier == 2);
  CHECK(back.interpretation == z2.interpretation);

  FinTop const top;
  auto const   mp  = builtin_presentation("monoid");
  auto const   mt  = build_lawvere_theory(mp, select_oracle(mp, false), 0, 2);
  auto const   orm = make(top, "monoid", sierpinski(), {{0, 1, 1, 1}, {0}});
  auto const   fa  = structure_to_functor(orm, mt);
  CHECK(functor_to_structure(fa).interpretation == orm.interpretation);
  auto const sample = mt.objects(2);
  CHECK(check_functor(fa, std::span(sample)).passed());

  auto const terminal = make(set, "monoid", std::size_t{1}, {{0}, {0}});
  CHECK(functor_to_structure(structure_to_functor(terminal, mt.with_listing_size(1))).carrier == 1);
}

TEST_CASE("a functor that is not product preserving is rejected") {
  FinSet const set;
  auto const   p = builtin_presentation("monoid");
  auto const   t = build_lawvere_theory(p, select_oracle(p, false));
  Functor<LawvereTheory, FinSet> two{t, set, "two", [](std::size_t) { return std::size_t{2}; },
                                     [&](TermTuple const&) { return set.identity(2); }};
  CHECK(code_of([&] { functor_to_structure(two); }) == Errc::not_product_preserving);
}

TEST_CASE("round trip of every monoid and group on at most three elements") {
  FinSet const set;
  for (auto const& name : {"monoid", "group"}) {
    auto const  p     = builtin_presentation(name);
    auto const  t     = build_lawvere_theory(p, select_oracle(p, false));
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& s : enumerate_structures(p, n, set)) {
        CHECK(functor_to_structure(structure_to_functor(s, t)).interpretation == s.interpretation);
        ++count;
      }
    }
    CHECK(count == oracle::models(p, 1).size() + oracle::models(p, 2).size() + oracle::models(p, 3).size());
  }
}

TEST_CASE("algebras for the theory of sets") {
  FinSet const set;
  CHECK(eval_at_one(n_algebra(set, std::size_t{3})) == 3);
  CHECK(eval_at_one(n_algebra(set, std::size_t{1})) == 1);
  Functor<TheoryN, FinSet> bad{TheoryN(2), set, "bad", [](std::size_t) { return std::size_t{2}; },
                               [&](NArrow const&) { return set.identity(2); }};
  CHECK(code_of([&] { eval_at_one(bad); }) == Errc::not_product_preserving);
}

TEST_CASE("a natural transformation is determined by its component at one") {
  // Every family of maps a^k -> b^k (k <= 2) natural for the theory of
  // sets, found by brute force; no two agree at 1.
  FinSet const set;
  for (std::size_t a = 1; a <= 2; ++a) {
    for (std::size_t b = 1; b <= 2; ++b) {
      auto const from = n_algebra(set, a, 2);
      auto const to   = n_algebra(set, b, 2);
      auto const h0   = set.hom(from(std::size_t{0}), to(std::size_t{0}));
      auto const h1   = set.hom(from(std::size_t{1}), to(std::size_t{1}));
      auto const h2   = set.hom(from(std::size_t{2}), to(std::size_t{2}));
      std::map<Arrow<std::size_t>, int> natural_at_one;
      std::vector<std::size_t> const    sample{0, 1, 2};
      for (auto const& c0 : h0) {
        for (auto const& c1 : h1) {
          for (auto const& c2 : h2) {
            std::vector components{c0, c1, c2};
            NatTrans<TheoryN, FinSet> eta{from, to, [components](std::size_t k) { return components[k]; }};
            if (check_naturality(eta, std::span(sample), "eta").passed()) {
              ++natural_at_one[eval_at_one(eta)];
            }
          }
        }
      }
      CHECK(natural_at_one.size() == h1.size());
      for (auto const& [c, count] : natural_at_one) {
        CHECK(count == 1);
      }
    }
  }
}
