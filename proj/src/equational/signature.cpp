#include "structura/equational/signature.hpp"

#include <algorithm>
#include <unordered_set>

#include "structura/error.hpp"

namespace structura {

  Signature::Signature(std::vector<OpSymbol> symbols)
      : _symbols(std::move(symbols)) {
    std::unordered_set<std::string> seen;
    for (auto const& s : _symbols) {
      if (s.name.empty()) {
        raise(Errc::invalid_argument, "operation symbols must be named");
      }
      if (!seen.insert(s.name).second) {
        raise(Errc::invalid_argument,
              "duplicate operation symbol '" + s.name + "'");
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view name) const {
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      if (_symbols[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t Signature::index(std::string_view name) const {
    if (auto i = find(name)) {
      return *i;
    }
    raise(Errc::unknown_symbol,
          "symbol '" + std::string(name) + "' is not in the signature");
  }

  std::size_t Signature::arity(std::string_view name) const {
    return _symbols[index(name)].arity;
  }

  std::size_t Signature::max_arity() const noexcept {
    std::size_t result = 0;
    for (auto const& s : _symbols) {
      result = std::max(result, s.arity);
    }
    return result;
  }

  bool Signature::has_constants() const noexcept {
    return std::any_of(_symbols.begin(), _symbols.end(), [](auto const& s) {
      return s.arity == 0;
    });
  }

  void Signature::check(Term const& t) const {
    if (t.is_var()) {
      return;
    }
    auto a = arity(t.symbol());
    if (a != t.args().size()) {
      raise(Errc::signature_mismatch,
            "symbol '" + t.symbol() + "' has arity " + std::to_string(a)
                + " but is applied to " + std::to_string(t.args().size())
                + " arguments");
    }
    for (auto const& arg : t.args()) {
      check(arg);
    }
  }

  Identity::Identity(std::size_t context, Term lhs, Term rhs)
      : _context(context), _lhs(std::move(lhs)), _rhs(std::move(rhs)) {
    if (_lhs.variable_bound() > _context || _rhs.variable_bound() > _context) {
      raise(Errc::invalid_argument,
            "identity " + to_string(_lhs) + " = " + to_string(_rhs)
                + " uses a variable outside its context of size "
                + std::to_string(_context));
    }
  }

  std::string to_string(Identity const& id) {
    return to_string(id.lhs()) + " = " + to_string(id.rhs());
  }

  Presentation::Presentation(std::string           name,
                             Signature             signature,
                             std::vector<Identity> identities)
      : _name(std::move(name)),
        _signature(std::move(signature)),
        _identities(std::move(identities)) {
    for (auto const& id : _identities) {
      _signature.check(id.lhs());
      _signature.check(id.rhs());
    }
  }

  std::size_t Presentation::max_context() const noexcept {
    std::size_t result = 0;
    for (auto const& id : _identities) {
      result = std::max(result, id.context());
    }
    return result;
  }

}  // namespace structura
