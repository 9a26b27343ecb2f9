#include "structura/report.hpp"

#include <sstream>

#include "structura/error.hpp"

namespace structura {

  std::string_view to_string(Errc code) noexcept {
    switch (code) {
      case Errc::invalid_argument: return "InvalidArgument";
      case Errc::unbound_variable: return "UnboundVariable";
      case Errc::unknown_symbol: return "UnknownSymbol";
      case Errc::signature_mismatch: return "SignatureMismatch";
      case Errc::no_product: return "NoProduct";
      case Errc::no_mediator: return "NoMediator";
      case Errc::non_unique_mediator: return "NonUniqueMediator";
      case Errc::not_product_preserving: return "NotProductPreserving";
      case Errc::invalid_structure: return "InvalidStructure";
      case Errc::oracle_unsound: return "OracleUnsound";
      case Errc::bound_exceeded: return "BoundExceeded";
      case Errc::domain_error: return "DomainError";
    }
    return "Unknown";
  }

  Error::Error(Errc code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code) {}

  void raise(Errc code, std::string const& what) {
    throw Error(code, what);
  }

  void Report::ok(std::size_t index, std::string subject, std::string witness) {
    ++_checked;
    _records.push_back({true, index, std::move(subject), std::move(witness)});
  }

  void Report::fail(std::size_t index,
                    std::string subject,
                    std::string witness) {
    ++_checked;
    ++_failed;
    _records.push_back({false, index, std::move(subject), std::move(witness)});
  }

  void Report::merge(Report const& other) {
    _records.insert(_records.end(), other._records.begin(), other._records.end());
    _checked += other._checked;
    _failed += other._failed;
  }

  std::vector<ReportRecord> Report::failures() const {
    std::vector<ReportRecord> result;
    for (auto const& r : _records) {
      if (!r.ok) {
        result.push_back(r);
      }
    }
    return result;
  }

  std::string Report::summary() const {
    std::ostringstream os;
    os << "summary: total=" << _checked << " failed=" << _failed;
    return os.str();
  }

  std::string Report::str() const {
    std::ostringstream os;
    for (auto const& r : _records) {
      os << (r.ok ? "OK   [" : "FAIL [") << r.index << "] " << r.subject;
      if (!r.witness.empty()) {
        os << " witness=" << r.witness;
      }
      os << '\n';
    }
    os << summary() << '\n';
    return os.str();
  }

}  // namespace structura
