#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "structura/equational/signature.hpp"
#include "structura/fincat/space.hpp"

namespace structura::dsl {

  enum class DiagKind { syntax_error, unknown_name, arity_mismatch, duplicate_name, incomplete_table, invalid_value };

  std::string_view to_string(DiagKind kind) noexcept;

  struct Diagnostic {
    DiagKind    kind;
    std::size_t line;
    std::size_t column;
    std::string message;
  };

  std::string to_string(Diagnostic const& d);

  // Thrown by parse_spec with every diagnostic found.
  class ParseError : public std::runtime_error {
   public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    std::vector<Diagnostic> const& diagnostics() const noexcept {
      return _diagnostics;
    }

   private:
    std::vector<Diagnostic> _diagnostics;
  };

  struct TheoryDecl {
    std::string  name;
    Presentation presentation;
    // Variable names of each identity, by index.
    std::vector<std::vector<std::string>> variables;

    friend bool operator==(TheoryDecl const&, TheoryDecl const&) = default;
  };

  struct SetDecl {
    std::string              name;
    std::vector<std::string> elements;

    friend bool operator==(SetDecl const&, SetDecl const&) = default;
  };

  struct SpaceDecl {
    std::string              name;
    std::vector<std::string> points;
    Space                    space;

    friend bool operator==(SpaceDecl const&, SpaceDecl const&) = default;
  };

  // Tables are row-major over carrier^arity, in the theory's symbol order.
  // They are total but need not be continuous; validation says so.
  struct StructureDecl {
    std::string                           name;
    std::string                           theory;
    std::string                           carrier;
    std::vector<std::vector<std::size_t>> tables;

    friend bool operator==(StructureDecl const&, StructureDecl const&) = default;
  };

  // A carrier is either a set or a space; both are lists of named points.
  struct CarrierRef {
    std::string const*              name;
    std::vector<std::string> const* points;
    std::optional<Space>            space;  // empty for sets
  };

  class SpecDocument {
   public:
    std::vector<TheoryDecl>    theories;
    std::vector<SetDecl>       sets;
    std::vector<SpaceDecl>     spaces;
    std::vector<StructureDecl> structures;

    // Declared theories first, then the built-in ones by name.
    std::optional<Presentation> theory(std::string_view name) const;
    std::optional<CarrierRef>   carrier(std::string_view name) const;
    StructureDecl const*        structure(std::string_view name) const;

    friend bool operator==(SpecDocument const&, SpecDocument const&) = default;
  };

  // Elaborates the whole document or throws ParseError.  Variable names in
  // identities are numbered in order of first occurrence, left side first.
  SpecDocument parse_spec(std::string_view text);

  // Canonical text; parse_spec(print_spec(d)) == d.
  std::string print_spec(SpecDocument const& doc);

  // The pieces print_spec is made of.  `space` absent means a set block.
  std::string print_carrier(std::string const&              name,
                            std::vector<std::string> const& points,
                            std::optional<Space> const&     space);
  std::string print_structure(StructureDecl const&            s,
                              Signature const&                sig,
                              std::vector<std::string> const& points);

}  // namespace structura::dsl
