// Comparison of computed K-homology against the reference tables.
#ifndef KCRYSTAL_VERIFY_HPP_
#define KCRYSTAL_VERIFY_HPP_

#include <string>
#include <string_view>
#include <vector>
#include "fixtures.hpp"
#include "khomology.hpp"

namespace kcrystal {

enum class ItemLevel { Headline, Row, Display, Label };
// Note: informational, never fails a report
enum class ItemStatus { Match, Discrepancy, ExpectedDiscrepancy, Note };

const char* level_name(ItemLevel l);
ItemLevel parse_level(std::string_view s);
const char* status_name(ItemStatus s);
ItemStatus parse_status(std::string_view s);

struct VerificationItem {
  ItemLevel level = ItemLevel::Row;
  std::string label;  // table row, or "-"
  std::string field;  // K0, K1, even, odd, q, x, class, unmatched, extra, fc-equal, expect
  std::string table;
  std::string computed;
  ItemStatus status = ItemStatus::Match;
  std::string detail;

  bool operator==(const VerificationItem& o) const {
    return level == o.level && label == o.label && field == o.field && table == o.table &&
           computed == o.computed && status == o.status && detail == o.detail;
  }
};

struct VerificationReport {
  std::string group;
  KResult computed;      // in the table's mode
  GroupFixture fixture;
  std::vector<VerificationItem> items;

  size_t count(ItemStatus s) const;
  // no unannotated discrepancy
  bool ok() const { return count(ItemStatus::Discrepancy) == 0; }
  bool operator==(const VerificationReport& o) const {
    return group == o.group && computed == o.computed && fixture == o.fixture && items == o.items;
  }
};

VerificationReport verify_group(const GroupSpec& spec, const GroupFixture& fx, int N = 12);
// group = "" runs every fixture
std::vector<VerificationReport> verify_against_tables(const std::vector<GroupFixture>& fx,
                                                     std::string_view group = {});
std::vector<VerificationReport> verify_against_tables(std::string_view group = {});

} // namespace kcrystal
#endif
