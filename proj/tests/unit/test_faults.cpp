#include <catch_amalgamated.hpp>

#include "structura/fincat/adjunctions.hpp"
#include "structura/lawvere/builtins.hpp"
#include "structura/transport/enumerate.hpp"
#include "structura/transport/lifted.hpp"
#include "structura/transport/verify.hpp"

using namespace structura;

namespace {
  Presentation const monoid = builtin_presentation("monoid");

  std::vector<StructuredObject<FinTop>> all_monoids(std::size_t max_points) {
    FinTop const                          top;
    std::vector<StructuredObject<FinTop>> out;
    for (auto const& x : top.objects(max_points)) {
      for (auto const& s : enumerate_structures(monoid, x, top)) {
        out.push_back(s);
      }
    }
    return out;
  }

  // Every structure obtained from s by changing one table entry.
  template <class Cat>
  std::vector<StructuredObject<Cat>> single_entry_corruptions(StructuredObject<Cat> const& s) {
    std::vector<StructuredObject<Cat>> out;
    auto const                         n = s.cat.points(s.carrier);
    for (std::size_t k = 0; k < s.interpretation.size(); ++k) {
      for (std::size_t entry = 0; entry < s.interpretation[k].image.size(); ++entry) {
        for (Point value = 0; value < n; ++value) {
          if (value != s.interpretation[k].image[entry]) {
            auto bad                                 = s;
            bad.interpretation[k].image[entry] = value;
            out.push_back(std::move(bad));
          }
        }
      }
    }
    return out;
  }

  // The adjunction with its counit changed at one object.
  template <class C, class D>
  Adjunction<C, D> with_counit(Adjunction<C, D> adj, typename D::Object at, typename D::Morphism bad) {
    auto good            = adj.counit.component;
    adj.counit.component = [good, at, bad](typename D::Object const& d) {
      return d == at ? bad : good(d);
    };
    return adj;
  }

  // Every map with the counit's type that differs from it in one entry.
  template <class M>
  std::vector<M> single_entry_changes(M const& f, std::size_t points) {
    std::vector<M> out;
    for (std::size_t p = 0; p < f.image.size(); ++p) {
      for (Point v = 0; v < points; ++v) {
        if (v != f.image[p]) {
          auto g     = f;
          g.image[p] = v;
          out.push_back(g);
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("corrupted ascents are detected") {
  auto const  l         = lift_adjunction(make_beta_adjunction(), monoid);
  std::size_t injected  = 0;
  std::size_t detected  = 0;
  std::size_t by_validation = 0;
  for (auto const& c : all_monoids(3)) {
    auto const up = ascend(c, l);
    if (up.structure.carrier.size() < 2) {
      continue;
    }
    for (auto const& bad : single_entry_corruptions(up.structure)) {
      ++injected;
      bool const invalid = !validate_structure(bad, monoid).passed();
      by_validation += invalid;
      detected += invalid || !verify_ascent_pair(c, bad, l, 0).passed();
    }
  }
  CAPTURE(injected, by_validation);
  CHECK(injected > 0);
  CHECK(detected == injected);
}

TEST_CASE("corrupted descents are detected") {
  auto const  l        = lift_adjunction(make_discrete_forgetful_adjunction(), monoid);
  std::size_t injected = 0;
  std::size_t detected = 0;
  for (auto const& d : all_monoids(3)) {
    auto const down = descend(d, l);
    if (down.structure.carrier < 2) {
      continue;
    }
    for (auto const& bad : single_entry_corruptions(down.structure)) {
      ++injected;
      detected += !validate_structure(bad, monoid).passed() || !verify_descent_pair(d, bad, l, 0).passed();
    }
  }
  CHECK(injected > 0);
  CHECK(detected == injected);
}

TEST_CASE("corrupted counit components are detected") {
  FinTop const top;
  SECTION("finite Stone-Cech") {
    auto const  adj    = make_beta_adjunction();
    auto const  lower  = top.objects(2);
    auto const  upper  = FinDisc{}.objects(3);
    std::size_t injected = 0, detected = 0;
    for (auto const& d : upper) {
      for (auto const& bad : single_entry_changes(adj.counit(d), d.size())) {
        ++injected;
        auto const report = check_adjunction(with_counit(adj, d, bad), std::span(lower), std::span(upper));
        detected += !report.passed();
      }
    }
    CHECK(injected == 8);
    CHECK(detected == injected);
  }
  SECTION("discrete-forgetful") {
    auto const  adj   = make_discrete_forgetful_adjunction();
    auto const  lower = FinSet{}.objects(2);
    auto const  upper = top.objects(3);
    std::size_t injected = 0, detected = 0;
    for (auto const& x : upper) {
      for (auto const& bad : single_entry_changes(adj.counit(x), x.size())) {
        ++injected;
        auto const report = check_adjunction(with_counit(adj, x, bad), std::span(lower), std::span(upper));
        detected += !report.passed();
      }
    }
    CHECK(injected == 4 * 2 + 29 * 6);
    CHECK(detected == injected);
  }
}

TEST_CASE("a corrupted left adjoint breaks the uniqueness sweep") {
  FinTop const top;
  std::size_t  injected = 0, detected = 0;
  for (auto const& c : all_monoids(3)) {
    auto       adj  = make_beta_adjunction();
    auto const mul  = c.op("m");
    auto const fmul = adj.left(mul);
    if (fmul.cod.size() < 2) {
      continue;
    }
    for (auto const& bad : single_entry_changes(fmul, fmul.cod.size())) {
      auto broken             = adj;
      auto good               = adj.left.on_morphism;
      broken.left.on_morphism = [good, mul, bad](Arrow<Space> const& f) {
        return f == mul ? bad : good(f);
      };
      LiftedAdjunction<FinTop, FinDisc> const l(broken, monoid);
      ++injected;
      detected += !verify_unique_ascent(c, l).passed();
    }
  }
  CHECK(injected > 0);
  CHECK(detected == injected);
}
