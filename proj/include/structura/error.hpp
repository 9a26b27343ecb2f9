#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace structura {

  enum class Errc {
    invalid_argument,
    unbound_variable,
    unknown_symbol,
    signature_mismatch,
    no_product,
    no_mediator,
    non_unique_mediator,
    not_product_preserving,
    invalid_structure,
    oracle_unsound,
    bound_exceeded,
    domain_error,
  };

  std::string_view to_string(Errc code) noexcept;

  // Every failure raised by the library carries one of the codes above so
  // that the CLI and the Python bindings can map it without string matching.
  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what);

    Errc code() const noexcept {
      return _code;
    }

   private:
    Errc _code;
  };

  [[noreturn]] void raise(Errc code, std::string const& what);

}  // namespace structura
