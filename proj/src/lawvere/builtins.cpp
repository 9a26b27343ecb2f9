#include "structura/lawvere/builtins.hpp"

#include <algorithm>
#include <random>

#include "structura/equational/algebra.hpp"
#include "structura/equational/model_search.hpp"
#include "structura/equational/term_enum.hpp"
#include "structura/error.hpp"

namespace structura {

  namespace {
    Term x(std::size_t i) {
      return Term::var(i);
    }
    Term op(std::string const& s, std::vector<Term> args = {}) {
      return Term::app(s, std::move(args));
    }

    std::vector<Identity> monoid_laws(std::string const& m, std::string const& e) {
      return {Identity(1, op(m, {op(e), x(0)}), x(0)),
              Identity(1, op(m, {x(0), op(e)}), x(0)),
              Identity(3, op(m, {op(m, {x(0), x(1)}), x(2)}), op(m, {x(0), op(m, {x(1), x(2)})}))};
    }

    Identity commutativity(std::string const& m) {
      return Identity(2, op(m, {x(0), x(1)}), op(m, {x(1), x(0)}));
    }

    std::vector<Identity> group_laws() {
      auto ids = monoid_laws("m", "e");
      ids.emplace_back(1, op("m", {op("i", {x(0)}), x(0)}), op("e"));
      ids.emplace_back(1, op("m", {x(0), op("i", {x(0)})}), op("e"));
      return ids;
    }

    std::vector<Identity> ring_laws() {
      auto add = [](Term a, Term b) { return op("add", {std::move(a), std::move(b)}); };
      auto mul = [](Term a, Term b) { return op("mul", {std::move(a), std::move(b)}); };
      return {
          Identity(3, add(add(x(0), x(1)), x(2)), add(x(0), add(x(1), x(2)))),
          Identity(2, add(x(0), x(1)), add(x(1), x(0))),
          Identity(1, add(x(0), op("zero")), x(0)),
          Identity(1, add(x(0), op("neg", {x(0)})), op("zero")),
          Identity(3, mul(mul(x(0), x(1)), x(2)), mul(x(0), mul(x(1), x(2)))),
          Identity(1, mul(op("one"), x(0)), x(0)),
          Identity(1, mul(x(0), op("one")), x(0)),
          Identity(3, mul(x(0), add(x(1), x(2))), add(mul(x(0), x(1)), mul(x(0), x(2)))),
          Identity(3, mul(add(x(0), x(1)), x(2)), add(mul(x(0), x(2)), mul(x(1), x(2)))),
      };
    }

    std::vector<std::string> const families{
        "free", "monoid", "comm-monoid", "group", "abelian-group", "ring"};

    // Names of p's symbols of the given arity, in signature order.
    std::vector<std::string> of_arity(Signature const& sig, std::size_t arity) {
      std::vector<std::string> names;
      for (auto const& s : sig.symbols()) {
        if (s.arity == arity) {
          names.push_back(s.name);
        }
      }
      return names;
    }

    // Every ordering of the names, lexicographically.
    std::vector<std::vector<std::string>> orderings(std::vector<std::string> names) {
      std::vector<std::vector<std::string>> result;
      std::sort(names.begin(), names.end());
      do {
        result.push_back(names);
      } while (std::next_permutation(names.begin(), names.end()));
      return result;
    }

    // Signature p has exactly `shape[a]` symbols of arity a.
    bool has_shape(Signature const& sig, std::vector<std::size_t> const& shape) {
      if (sig.max_arity() >= shape.size() && !sig.empty()) {
        return false;
      }
      for (std::size_t a = 0; a < shape.size(); ++a) {
        if (of_arity(sig, a).size() != shape[a]) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::vector<std::string> builtin_theory_names() {
    return {"monoid", "comm-monoid", "group", "abelian-group", "ring", "pointed-set", "magma"};
  }

  std::optional<Presentation> find_builtin_presentation(std::string_view name) {
    Signature const monoid_sig({{"m", 2}, {"e", 0}});
    Signature const group_sig({{"m", 2}, {"e", 0}, {"i", 1}});
    if (name == "monoid") {
      return Presentation("monoid", monoid_sig, monoid_laws("m", "e"));
    }
    if (name == "comm-monoid") {
      auto ids = monoid_laws("m", "e");
      ids.push_back(commutativity("m"));
      return Presentation("comm-monoid", monoid_sig, ids);
    }
    if (name == "group") {
      return Presentation("group", group_sig, group_laws());
    }
    if (name == "abelian-group") {
      auto ids = group_laws();
      ids.push_back(commutativity("m"));
      return Presentation("abelian-group", group_sig, ids);
    }
    if (name == "ring") {
      return Presentation(
          "ring",
          Signature({{"add", 2}, {"mul", 2}, {"neg", 1}, {"zero", 0}, {"one", 0}}),
          ring_laws());
    }
    if (name == "pointed-set") {
      return Presentation("pointed-set", Signature({{"p", 0}}), {});
    }
    if (name == "magma") {
      return Presentation("magma", Signature({{"m", 2}}), {});
    }
    return std::nullopt;
  }

  Presentation builtin_presentation(std::string_view name) {
    if (auto p = find_builtin_presentation(name)) {
      return *p;
    }
    raise(Errc::unknown_symbol, "no built-in theory named '" + std::string(name) + "'");
  }

  std::optional<std::string> oracle_mismatch(Presentation const& p,
                                             TermEq const&       oracle,
                                             std::uint32_t       seed) {
    try {
      for (auto const& id : p.identities()) {
        auto l = oracle.normalize(id.lhs());
        auto r = oracle.normalize(id.rhs());
        if (!(l == r)) {
          return "identity " + to_string(id) + " normalizes to " + to_string(l)
                 + " and " + to_string(r);
        }
      }
      if (oracle.name() == "free" || !oracle.complete()) {
        return std::nullopt;
      }
      std::vector<FinAlgebra> models;
      for (auto& a : enumerate_models(p, 3)) {
        if (a.carrier() > 0) {
          models.push_back(std::move(a));
        }
      }
      std::mt19937 rng(seed);
      auto const   vars = std::max<std::size_t>(2, p.max_context());
      for (int trial = 0; trial < 64; ++trial) {
        auto t  = random_term(p.signature(), vars, 7, rng);
        auto nf = oracle.normalize(t);
        for (auto const& a : models) {
          auto const total = power(a.carrier(), vars);
          for (std::size_t k = 0; k < total; ++k) {
            auto asg = tuple_at(k, vars, a.carrier());
            if (evaluate(t, a, asg) != evaluate(nf, a, asg)) {
              return to_string(t) + " and its normal form " + to_string(nf)
                     + " differ in a model with " + std::to_string(a.carrier())
                     + " elements";
            }
          }
        }
      }
    } catch (Error const& e) {
      if (e.code() == Errc::bound_exceeded) {
        throw;
      }
      return e.what();
    }
    return std::nullopt;
  }

  void validate_oracle(Presentation const& p, TermEq const& oracle, std::uint32_t seed) {
    if (auto why = oracle_mismatch(p, oracle, seed)) {
      raise(Errc::oracle_unsound,
            "the " + oracle.name() + " oracle does not fit '" + p.name() + "': " + *why);
    }
  }

  std::vector<TermEqPtr> oracle_candidates(Presentation const& p, std::string_view family) {
    auto const&            sig = p.signature();
    std::vector<TermEqPtr> result;
    auto const             binary    = of_arity(sig, 2);
    auto const             unary     = of_arity(sig, 1);
    auto const             constants = of_arity(sig, 0);
    if (family == "free") {
      result.push_back(free_term_eq());
    } else if (family == "monoid" || family == "comm-monoid") {
      if (has_shape(sig, {1, 0, 1})) {
        result.push_back(family == "monoid" ? monoid_term_eq(binary[0], constants[0])
                                            : comm_monoid_term_eq(binary[0], constants[0]));
      }
    } else if (family == "group" || family == "abelian-group") {
      if (has_shape(sig, {1, 1, 1})) {
        result.push_back(family == "group"
                             ? group_term_eq(binary[0], constants[0], unary[0])
                             : abelian_group_term_eq(binary[0], constants[0], unary[0]));
      }
    } else if (family == "ring") {
      if (has_shape(sig, {2, 1, 2})) {
        for (auto const& b : orderings(binary)) {
          for (auto const& c : orderings(constants)) {
            result.push_back(ring_term_eq(b[0], b[1], unary[0], c[0], c[1]));
          }
        }
      }
    } else if (family == "bounded-semantic") {
      result.push_back(bounded_semantic_term_eq(p));
    } else {
      raise(Errc::unknown_symbol, "no oracle family named '" + std::string(family) + "'");
    }
    return result;
  }

  TermEqPtr select_oracle(Presentation const& p,
                          bool                allow_bounded,
                          std::string_view    family,
                          std::uint32_t       seed) {
    std::vector<std::string> tried
        = family.empty() ? families : std::vector<std::string>{std::string(family)};
    std::string reasons;
    for (auto const& f : tried) {
      if (f == "bounded-semantic") {
        continue;
      }
      for (auto const& candidate : oracle_candidates(p, f)) {
        auto why = oracle_mismatch(p, *candidate, seed);
        if (!why) {
          return candidate;
        }
        if (!family.empty()) {
          reasons += "; " + *why;
        }
      }
    }
    if (allow_bounded && (family.empty() || family == "bounded-semantic")) {
      return bounded_semantic_term_eq(p);
    }
    std::string what = family.empty() ? "no shipped oracle fits '" + p.name() + "'"
                                      : "the " + std::string(family)
                                            + " oracle does not fit '" + p.name() + "'";
    raise(Errc::oracle_unsound,
          what + reasons + (allow_bounded ? "" : " and the bounded fallback is not allowed"));
  }

}  // namespace structura
