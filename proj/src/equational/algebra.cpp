#include "structura/equational/algebra.hpp"

#include "structura/error.hpp"

namespace structura {

  std::size_t power(std::size_t base, std::size_t exponent) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      result *= base;
    }
    return result;
  }

  std::size_t tuple_index(std::span<std::size_t const> args, std::size_t carrier) {
    std::size_t index = 0;
    for (auto a : args) {
      index = index * carrier + a;
    }
    return index;
  }

  std::vector<std::size_t> tuple_at(std::size_t index,
                                    std::size_t arity,
                                    std::size_t carrier) {
    std::vector<std::size_t> result(arity, 0);
    for (std::size_t i = arity; i-- > 0;) {
      result[i] = index % carrier;
      index /= carrier;
    }
    return result;
  }

  FinAlgebra::FinAlgebra(Signature                             signature,
                         std::size_t                           carrier,
                         std::vector<std::vector<std::size_t>> tables)
      : _signature(std::move(signature)),
        _carrier(carrier),
        _tables(std::move(tables)) {
    if (_tables.size() != _signature.size()) {
      raise(Errc::invalid_argument,
            "expected one table per symbol (" + std::to_string(_signature.size())
                + "), got " + std::to_string(_tables.size()));
    }
    if (_carrier == 0 && _signature.has_constants()) {
      raise(Errc::domain_error,
            "a signature with constants has no algebra on the empty carrier");
    }
    for (std::size_t s = 0; s < _tables.size(); ++s) {
      auto const& sym = _signature.symbols()[s];
      if (_tables[s].size() != power(_carrier, sym.arity)) {
        raise(Errc::invalid_argument,
              "table of '" + sym.name + "' is not total: expected "
                  + std::to_string(power(_carrier, sym.arity)) + " entries, got "
                  + std::to_string(_tables[s].size()));
      }
      for (auto v : _tables[s]) {
        if (v >= _carrier) {
          raise(Errc::invalid_argument,
                "table of '" + sym.name + "' has an entry outside the carrier");
        }
      }
    }
  }

  std::vector<std::size_t> const& FinAlgebra::table(std::string_view symbol) const {
    return _tables[_signature.index(symbol)];
  }

  std::size_t FinAlgebra::apply(std::size_t                  symbol,
                                std::span<std::size_t const> args) const {
    return _tables[symbol][tuple_index(args, _carrier)];
  }

  std::size_t evaluate(Term const&                  t,
                       FinAlgebra const&            algebra,
                       std::span<std::size_t const> assignment) {
    if (t.is_var()) {
      if (t.var_index() >= assignment.size()) {
        raise(Errc::unbound_variable,
              "variable x" + std::to_string(t.var_index()) + " is not assigned");
      }
      return assignment[t.var_index()];
    }
    auto sym = algebra.signature().find(t.symbol());
    if (!sym) {
      raise(Errc::unknown_symbol,
            "algebra has no table for '" + t.symbol() + "'");
    }
    if (algebra.signature().symbols()[*sym].arity != t.args().size()) {
      raise(Errc::signature_mismatch,
            "arity mismatch at '" + t.symbol() + "'");
    }
    std::vector<std::size_t> args;
    args.reserve(t.args().size());
    for (auto const& a : t.args()) {
      args.push_back(evaluate(a, algebra, assignment));
    }
    return algebra.apply(*sym, args);
  }

  std::optional<std::vector<std::size_t>> counterexample(FinAlgebra const& algebra,
                                                         Identity const&   id) {
    algebra.signature().check(id.lhs());
    algebra.signature().check(id.rhs());
    auto const n = algebra.carrier();
    if (n == 0) {
      if (id.context() == 0) {
        raise(Errc::domain_error,
              "ground identity checked on the empty carrier");
      }
      return std::nullopt;  // no assignments
    }
    auto const total = power(n, id.context());
    for (std::size_t k = 0; k < total; ++k) {
      auto asg = tuple_at(k, id.context(), n);
      if (evaluate(id.lhs(), algebra, asg) != evaluate(id.rhs(), algebra, asg)) {
        return asg;
      }
    }
    return std::nullopt;
  }

  bool satisfies(FinAlgebra const& algebra, Identity const& id) {
    return !counterexample(algebra, id).has_value();
  }

  bool satisfies(FinAlgebra const& algebra, Presentation const& p) {
    for (auto const& id : p.identities()) {
      if (!satisfies(algebra, id)) {
        return false;
      }
    }
    return true;
  }

  bool is_homomorphism(std::span<std::size_t const> f,
                       FinAlgebra const&            source,
                       FinAlgebra const&            target) {
    if (!(source.signature() == target.signature())) {
      raise(Errc::signature_mismatch,
            "homomorphism check between algebras of different signatures");
    }
    if (f.size() != source.carrier()) {
      raise(Errc::invalid_argument, "map is not total on the source carrier");
    }
    for (auto v : f) {
      if (v >= target.carrier()) {
        raise(Errc::invalid_argument, "map leaves the target carrier");
      }
    }
    auto const& symbols = source.signature().symbols();
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      auto const arity = symbols[s].arity;
      auto const total = power(source.carrier(), arity);
      std::vector<std::size_t> image(arity);
      for (std::size_t k = 0; k < total; ++k) {
        auto args = tuple_at(k, arity, source.carrier());
        for (std::size_t j = 0; j < arity; ++j) {
          image[j] = f[args[j]];
        }
        if (f[source.apply(s, args)] != target.apply(s, image)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace structura
