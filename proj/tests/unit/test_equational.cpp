#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "structura/equational/algebra.hpp"
#include "structura/equational/model_search.hpp"
#include "structura/equational/term_enum.hpp"
#include "structura/error.hpp"
#include "structura/lawvere/builtins.hpp"

using namespace structura;

namespace {
  Term v(std::size_t i) {
    return Term::var(i);
  }
  Term m(Term a, Term b) {
    return Term::app("m", {std::move(a), std::move(b)});
  }
  Term e() {
    return Term::app("e");
  }
  Term i(Term a) {
    return Term::app("i", {std::move(a)});
  }

  Signature monoid_sig() {
    return Signature({{"m", 2}, {"e", 0}});
  }
  Signature group_sig() {
    return Signature({{"m", 2}, {"e", 0}, {"i", 1}});
  }
  FinAlgebra or_monoid() {
    return FinAlgebra(monoid_sig(), 2, {{0, 1, 1, 1}, {0}});
  }
  FinAlgebra z2() {
    return FinAlgebra(group_sig(), 2, {{0, 1, 1, 0}, {0}, {0, 1}});
  }

  Errc code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return Errc::invalid_argument;
  }

  std::set<std::vector<std::vector<std::size_t>>> tables_of(std::vector<FinAlgebra> const& algebras) {
    std::set<std::vector<std::vector<std::size_t>>> out;
    for (auto const& a : algebras) {
      out.insert(a.tables());
    }
    return out;
  }
}  // namespace

TEST_CASE("substitution replaces variables and keeps structure") {
  std::vector<Term> env1{e()};
  CHECK(substitute(v(0), env1) == e());

  std::vector<Term> swap{v(1), v(0)};
  CHECK(substitute(m(v(0), v(1)), swap) == m(v(1), v(0)));

  std::vector<Term> square{m(v(0), v(0))};
  CHECK(substitute(m(v(0), e()), square) == m(m(v(0), v(0)), e()));

  CHECK(code_of([] { substitute(m(v(0), v(2)), std::vector<Term>{v(0), v(1)}); })
        == Errc::unbound_variable);
}

TEST_CASE("substitution composes and commutes with evaluation") {
  std::mt19937 rng(7);
  auto const   sig = group_sig();
  auto const   a   = z2();
  for (int round = 0; round < 200; ++round) {
    auto              t = random_term(sig, 3, 6, rng);
    std::vector<Term> e1, e2;
    for (int k = 0; k < 3; ++k) {
      e1.push_back(random_term(sig, 2, 4, rng));
      e2.push_back(random_term(sig, 3, 4, rng));
    }
    std::vector<Term> composed;
    for (auto const& x : e1) {
      composed.push_back(substitute(x, e2));
    }
    CHECK(substitute(substitute(t, e1), e2) == substitute(t, composed));

    std::vector<std::size_t> asg{1, 0};
    std::vector<std::size_t> inner;
    for (auto const& x : e1) {
      inner.push_back(evaluate(x, a, asg));
    }
    CHECK(evaluate(substitute(t, e1), a, asg) == evaluate(t, a, inner));
    CHECK(evaluate(t, a, inner) == oracle::eval(t, sig, a.tables(), 2, inner));
  }
}

TEST_CASE("evaluation in small algebras") {
  std::vector<std::size_t> one{1};
  CHECK(evaluate(v(0), or_monoid(), one) == 1);
  CHECK(evaluate(m(v(0), e()), or_monoid(), one) == 1);
  CHECK(evaluate(m(v(0), i(v(0))), z2(), one) == 0);
  CHECK(code_of([&] { evaluate(v(3), or_monoid(), one); }) == Errc::unbound_variable);
  CHECK(code_of([&] { evaluate(Term::app("k"), or_monoid(), one); }) == Errc::unknown_symbol);
}

TEST_CASE("satisfaction checks every assignment") {
  Identity left_unit(1, m(e(), v(0)), v(0));
  Identity right_unit(1, m(v(0), e()), v(0));
  CHECK(satisfies(or_monoid(), left_unit));

  FinAlgebra constant(monoid_sig(), 2, {{0, 0, 0, 0}, {0}});
  CHECK_FALSE(satisfies(constant, right_unit));
  auto witness = counterexample(constant, right_unit);
  REQUIRE(witness);
  CHECK(*witness == std::vector<std::size_t>{1});

  CHECK(satisfies(or_monoid(), Identity(1, v(0), v(0))));

  // vacuous on the empty carrier
  FinAlgebra empty(Signature({{"m", 2}}), 0, {{}});
  CHECK(satisfies(empty, Identity(1, m(v(0), v(0)), v(0))));
}

TEST_CASE("homomorphisms") {
  std::vector<std::size_t> id{0, 1};
  CHECK(is_homomorphism(id, or_monoid(), or_monoid()));

  FinAlgebra trivial(group_sig(), 1, {{0}, {0}, {0}});
  std::vector<std::size_t> collapse{0, 0};
  CHECK(is_homomorphism(collapse, z2(), trivial));

  // Collapsing onto the unit preserves m: f(m(1,1)) = 0 = m(0,0).
  CHECK(is_homomorphism(collapse, or_monoid(), or_monoid()));
  CHECK(oracle::is_homomorphism(monoid_sig(), collapse, or_monoid().tables(), 2,
                                or_monoid().tables(), 2));
  // Collapsing onto 1 misses the unit.
  std::vector<std::size_t> top{1, 1};
  CHECK_FALSE(is_homomorphism(top, or_monoid(), or_monoid()));
  CHECK_FALSE(oracle::is_homomorphism(monoid_sig(), top, or_monoid().tables(), 2,
                                      or_monoid().tables(), 2));
  // The swap is not one either: m(1,1) = 1 but m(0,0) = 0.
  std::vector<std::size_t> swap{1, 0};
  CHECK_FALSE(is_homomorphism(swap, or_monoid(), or_monoid()));
  CHECK(code_of([&] { is_homomorphism(id, or_monoid(), z2()); }) == Errc::signature_mismatch);
}

TEST_CASE("composites of homomorphisms are homomorphisms") {
  auto const p      = builtin_presentation("monoid");
  auto const models = enumerate_models(p, 2);
  for (auto const& a : models) {
    for (auto const& b : models) {
      for (auto const& c : models) {
        for (std::size_t f = 0; f < power(b.carrier(), a.carrier()); ++f) {
          auto ff = tuple_at(f, a.carrier(), b.carrier());
          if (!is_homomorphism(ff, a, b)) {
            continue;
          }
          for (std::size_t g = 0; g < power(c.carrier(), b.carrier()); ++g) {
            auto gg = tuple_at(g, b.carrier(), c.carrier());
            if (!is_homomorphism(gg, b, c)) {
              continue;
            }
            std::vector<std::size_t> gf;
            for (auto x : ff) {
              gf.push_back(gg[x]);
            }
            CHECK(is_homomorphism(gf, a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("signatures and algebras reject malformed data") {
  CHECK(code_of([] { Signature({{"m", 2}, {"m", 1}}); }) == Errc::invalid_argument);
  CHECK(code_of([] { monoid_sig().check(Term::app("m", {v(0)})); }) == Errc::signature_mismatch);
  CHECK(code_of([] { FinAlgebra(monoid_sig(), 2, {{0, 1, 1}, {0}}); }) == Errc::invalid_argument);
  CHECK(code_of([] { FinAlgebra(monoid_sig(), 2, {{0, 1, 1, 2}, {0}}); }) == Errc::invalid_argument);
  CHECK(code_of([] { FinAlgebra(monoid_sig(), 0, {{}, {}}); }) == Errc::domain_error);
  CHECK(code_of([] { Identity(1, v(1), v(0)); }) == Errc::invalid_argument);
}

TEST_CASE("model search agrees with exhaustive table enumeration") {
  for (auto const& name : {"monoid", "comm-monoid", "group", "abelian-group", "magma", "pointed-set"}) {
    auto const p = builtin_presentation(name);
    for (std::size_t n = 0; n <= 3; ++n) {
      auto expected = oracle::models(p, n);
      auto found    = enumerate_algebras(p, n);
      CAPTURE(name, n);
      CHECK(tables_of(found) == std::set(expected.begin(), expected.end()));
      CHECK(found.size() == expected.size());
    }
  }
}

TEST_CASE("model search respects an order") {
  auto const p = builtin_presentation("monoid");
  for (auto const& x : oracle::preorders(3)) {
    std::size_t expected = 0;
    for (auto const& t : oracle::models(p, 3)) {
      expected += oracle::continuous(t[0], x, 2) && oracle::continuous(t[1], x, 0);
    }
    CHECK(enumerate_algebras(p, 3, &x.le).size() == expected);
  }
}

TEST_CASE("model search bounds") {
  auto const   p = builtin_presentation("monoid");
  SearchBounds tight;
  tight.max_carrier = 2;
  CHECK(code_of([&] { enumerate_algebras(p, 3, nullptr, tight); }) == Errc::bound_exceeded);
  tight           = {};
  tight.max_nodes = 10;
  CHECK(code_of([&] { enumerate_algebras(p, 3, nullptr, tight); }) == Errc::bound_exceeded);
  CHECK(enumerate_algebras(p, 0).empty());
}

TEST_CASE("term enumeration") {
  auto const sig = monoid_sig();
  // words with unit: 2 variables give 1 + 2 leaves at size 1
  CHECK(terms_of_size(sig, 2, 1).size() == 3);
  auto all = terms_up_to(sig, 2, 3);
  CHECK(std::is_sorted(all.begin(), all.end(), [](Term const& a, Term const& b) {
    return a.size() < b.size() || (a.size() == b.size() && a < b);
  }));
  std::set<Term> unique(all.begin(), all.end());
  CHECK(unique.size() == all.size());
  for (auto const& t : all) {
    CHECK(t.size() <= 3);
    CHECK(t.variable_bound() <= 2);
  }
  CHECK(terms_of_size(Signature({{"m", 2}}), 0, 2).empty());
}
