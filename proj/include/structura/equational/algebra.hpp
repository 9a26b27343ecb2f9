#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "structura/equational/signature.hpp"

namespace structura {

  // Row-major position of args in carrier^args.size().
  std::size_t tuple_index(std::span<std::size_t const> args, std::size_t carrier);
  // Inverse of tuple_index.
  std::vector<std::size_t> tuple_at(std::size_t index,
                                    std::size_t arity,
                                    std::size_t carrier);
  std::size_t power(std::size_t base, std::size_t exponent);

  // A Σ-algebra on the carrier {0, ..., n-1}.  Table i belongs to symbol i of
  // the signature and is stored row-major over carrier^arity.
  class FinAlgebra {
   public:
    // Throws InvalidArgument if a table is not total or has out-of-range
    // entries, or if the carrier is empty and the signature has constants.
    FinAlgebra(Signature                             signature,
               std::size_t                           carrier,
               std::vector<std::vector<std::size_t>> tables);

    Signature const& signature() const noexcept {
      return _signature;
    }
    std::size_t carrier() const noexcept {
      return _carrier;
    }
    std::vector<std::vector<std::size_t>> const& tables() const noexcept {
      return _tables;
    }
    std::vector<std::size_t> const& table(std::size_t symbol) const {
      return _tables.at(symbol);
    }
    // Throws UnknownSymbol.
    std::vector<std::size_t> const& table(std::string_view symbol) const;

    std::size_t apply(std::size_t symbol, std::span<std::size_t const> args) const;

    friend bool operator==(FinAlgebra const&, FinAlgebra const&) = default;

   private:
    Signature                             _signature;
    std::size_t                           _carrier;
    std::vector<std::vector<std::size_t>> _tables;
  };

  // Throws UnboundVariable / UnknownSymbol.
  std::size_t evaluate(Term const&                  t,
                       FinAlgebra const&            algebra,
                       std::span<std::size_t const> assignment);

  // First assignment (in row-major order) on which the two sides differ.
  std::optional<std::vector<std::size_t>> counterexample(FinAlgebra const& algebra,
                                                         Identity const&   id);

  bool satisfies(FinAlgebra const& algebra, Identity const& id);
  bool satisfies(FinAlgebra const& algebra, Presentation const& p);

  // Throws SignatureMismatch if the two algebras have different signatures.
  bool is_homomorphism(std::span<std::size_t const> f,
                       FinAlgebra const&            source,
                       FinAlgebra const&            target);

}  // namespace structura
