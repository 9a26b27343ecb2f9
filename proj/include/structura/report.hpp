#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace structura {

  struct ReportRecord {
    bool        ok;
    std::size_t index;
    std::string subject;
    std::string witness;
  };

  // Line-oriented result of a verification pass.  Checks that pass silently
  // only bump the counter; records are kept for failures and for anything a
  // caller wants listed explicitly (one record per candidate in the sweeps).
  class Report {
   public:
    void pass() {
      ++_checked;
    }
    void ok(std::size_t index, std::string subject, std::string witness = {});
    void fail(std::size_t index, std::string subject, std::string witness = {});

    // Folds another report in, keeping its records and counters.
    void merge(Report const& other);

    bool passed() const noexcept {
      return _failed == 0;
    }
    std::size_t checked() const noexcept {
      return _checked;
    }
    std::size_t failed() const noexcept {
      return _failed;
    }
    std::vector<ReportRecord> const& records() const noexcept {
      return _records;
    }
    std::vector<ReportRecord> failures() const;

    // "OK   [i] subject witness=..." per record, then a summary line.
    std::string str() const;
    std::string summary() const;

   private:
    std::vector<ReportRecord> _records;
    std::size_t               _checked = 0;
    std::size_t               _failed  = 0;
  };

}  // namespace structura
