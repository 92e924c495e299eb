#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gf2nbasis::tables {

struct GnbRow {
  std::uint64_t n = 0;
  unsigned k = 0;
  friend bool operator==(const GnbRow&, const GnbRow&) = default;
};

struct EnbRow {
  std::uint64_t n = 0;
  unsigned embed = 0;
  friend bool operator==(const EnbRow&, const EnbRow&) = default;
};

/// A subfield degree together with its lowest GNB type.
struct SubfieldBasis {
  std::uint64_t d = 0;
  unsigned k = 0;
  friend bool operator==(const SubfieldBasis&, const SubfieldBasis&) = default;
};

/// n without a GNB of type <= kmax, with the workarounds through
/// F_{2^{n/2}}, F_{2^{n/4}}, F_{2^{n/3}} and an elliptic basis.
struct ExtRow {
  std::uint64_t n = 0;
  std::optional<SubfieldBasis> as2;
  std::optional<SubfieldBasis> witt4;
  std::optional<SubfieldBasis> kummer;
  /// 3 | 2^d - 1 for the Kummer subfield; empty when the Kummer column is.
  std::optional<bool> kummer_admissible;
  std::optional<unsigned> enb_embed;
  friend bool operator==(const ExtRow&, const ExtRow&) = default;
};

/// `jobs` sizes the OpenMP team; 0 leaves the runtime default.
std::vector<GnbRow> gnb_range(std::uint64_t min, std::uint64_t max, unsigned kmax, int jobs = 0);
std::vector<EnbRow> enb_range(std::uint64_t min, std::uint64_t max, unsigned emax, int jobs = 0);
std::vector<ExtRow> ext_range(std::uint64_t min, std::uint64_t max, unsigned kmax, unsigned emax,
                              int jobs = 0);

/// Single-threaded reference scans; the parallel versions must match them.
namespace serial {
std::vector<GnbRow> gnb_range(std::uint64_t min, std::uint64_t max, unsigned kmax);
std::vector<EnbRow> enb_range(std::uint64_t min, std::uint64_t max, unsigned emax);
std::vector<ExtRow> ext_range(std::uint64_t min, std::uint64_t max, unsigned kmax, unsigned emax);
} // namespace serial

/// 3 | 2^d - 1 holds exactly when d is even, since 2 has order 2 modulo 3.
bool kummer_admissible(std::uint64_t d);
std::vector<std::uint64_t> kummer_filter(std::span<const std::uint64_t> ds);

// ---------------------------------------------------------------------------
// CSV tables

enum class Schema { Gnb, Enb, Ext };

const std::vector<std::string>& header(Schema schema);

/// Rows as string cells; absent values are empty strings.
struct Table {
  Schema schema = Schema::Gnb;
  std::vector<std::vector<std::string>> rows;
};

Table to_table(std::span<const GnbRow> rows);
Table to_table(std::span<const EnbRow> rows);
Table to_table(std::span<const ExtRow> rows);

std::string to_csv(const Table& table);
/// Writes `to_csv(table)` to `path`.
void emit_csv(const Table& table, const std::filesystem::path& path);

/// Parses CSV text with the exact header of `schema`. Throws FormatError on a
/// wrong header, wrong cell count, CR line endings, non-numeric or duplicate n.
Table parse_csv(const std::string& text, Schema schema);
Table read_csv(const std::filesystem::path& path, Schema schema);

struct DiffEntry {
  enum class Kind { Missing, Extra, Changed };
  Kind kind = Kind::Changed;
  std::uint64_t n = 0;
  std::string golden;    // CSV line from the golden file; empty for Extra
  std::string generated; // CSV line from the regeneration; empty for Missing
};

/// Rows keyed by n. Missing: only in golden; Extra: only in generated.
struct DiffReport {
  std::vector<DiffEntry> entries;
  bool empty() const { return entries.empty(); }
  std::string to_string() const;
};

DiffReport diff_tables(const Table& generated, const Table& golden);
DiffReport diff_golden(const std::filesystem::path& generated,
                       const std::filesystem::path& golden, Schema schema);

} // namespace gf2nbasis::tables
