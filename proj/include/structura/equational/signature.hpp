#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "structura/equational/term.hpp"

namespace structura {

  struct OpSymbol {
    std::string name;
    std::size_t arity;

    friend bool operator==(OpSymbol const&, OpSymbol const&) = default;
  };

  class Signature {
   public:
    Signature() = default;
    // Throws InvalidArgument on duplicate names.
    explicit Signature(std::vector<OpSymbol> symbols);

    std::vector<OpSymbol> const& symbols() const noexcept {
      return _symbols;
    }
    std::size_t size() const noexcept {
      return _symbols.size();
    }
    bool empty() const noexcept {
      return _symbols.empty();
    }

    std::optional<std::size_t> find(std::string_view name) const;
    // Throws UnknownSymbol.
    std::size_t index(std::string_view name) const;
    std::size_t arity(std::string_view name) const;

    std::size_t max_arity() const noexcept;
    bool        has_constants() const noexcept;

    // Throws UnknownSymbol / SignatureMismatch if t uses an undeclared symbol
    // or applies a symbol to the wrong number of arguments.
    void check(Term const& t) const;

    friend bool operator==(Signature const&, Signature const&) = default;

   private:
    std::vector<OpSymbol> _symbols;
  };

  // A universally closed equation lhs = rhs over the variables x0..x{m-1}.
  class Identity {
   public:
    // Throws InvalidArgument if a variable index is >= context.
    Identity(std::size_t context, Term lhs, Term rhs);

    std::size_t context() const noexcept {
      return _context;
    }
    Term const& lhs() const noexcept {
      return _lhs;
    }
    Term const& rhs() const noexcept {
      return _rhs;
    }

    friend bool operator==(Identity const&, Identity const&) = default;

   private:
    std::size_t _context;
    Term        _lhs;
    Term        _rhs;
  };

  std::string to_string(Identity const& id);

  // A signature together with a finite set of identities of that type.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::string name,
                 Signature   signature,
                 std::vector<Identity> identities);

    std::string const& name() const noexcept {
      return _name;
    }
    Signature const& signature() const noexcept {
      return _signature;
    }
    std::vector<Identity> const& identities() const noexcept {
      return _identities;
    }

    std::size_t max_context() const noexcept;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    std::string           _name;
    Signature             _signature;
    std::vector<Identity> _identities;
  };

}  // namespace structura
