#include "gf2nbasis/tables.hpp"

#include "gf2nbasis/algebraic.hpp"
#include "gf2nbasis/error.hpp"
#include "gf2nbasis/gauss.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gf2nbasis::tables {

namespace {

void check_range(std::uint64_t min, std::uint64_t max) {
  if (min < 2 || min > max) throw ParameterError("range scan needs 2 <= min <= max");
}

std::optional<GnbRow> gnb_row(std::uint64_t n, unsigned kmax) {
  if (auto k = gauss::lowest_type(n, kmax)) return GnbRow{n, *k};
  return std::nullopt;
}

std::optional<unsigned> enb_embed(std::uint64_t n, unsigned emax) {
  if (n < 4) return std::nullopt;
  return algebraic::enb_embedding_degree(n, emax).embed;
}

std::optional<EnbRow> enb_row(std::uint64_t n, unsigned emax) {
  if (auto e = enb_embed(n, emax)) return EnbRow{n, *e};
  return std::nullopt;
}

std::optional<SubfieldBasis> subfield(std::uint64_t n, std::uint64_t divisor, unsigned kmax) {
  if (n % divisor != 0 || n / divisor < 2) return std::nullopt;
  const std::uint64_t d = n / divisor;
  if (auto k = gauss::lowest_type(d, kmax)) return SubfieldBasis{d, *k};
  return std::nullopt;
}

std::optional<ExtRow> ext_row(std::uint64_t n, unsigned kmax, unsigned emax) {
  if (gauss::lowest_type(n, kmax)) return std::nullopt;
  ExtRow row;
  row.n = n;
  row.as2 = subfield(n, 2, kmax);
  row.witt4 = subfield(n, 4, kmax);
  row.kummer = subfield(n, 3, kmax);
  if (row.kummer) row.kummer_admissible = kummer_admissible(row.kummer->d);
  row.enb_embed = enb_embed(n, emax);
  return row;
}

template <typename Row, typename RowFn>
std::vector<Row> scan_serial(std::uint64_t min, std::uint64_t max, RowFn row_for) {
  check_range(min, max);
  std::vector<Row> out;
  for (std::uint64_t n = min; n <= max; ++n) {
    if (auto row = row_for(n)) out.push_back(*row);
  }
  return out;
}

// Each n writes only its own slot, so the compaction afterwards is in
// ascending order regardless of scheduling.
template <typename Row, typename RowFn>
std::vector<Row> scan_parallel(std::uint64_t min, std::uint64_t max, int jobs, RowFn row_for) {
  check_range(min, max);
  const auto count = static_cast<std::int64_t>(max - min + 1);
  std::vector<std::optional<Row>> slots(static_cast<std::size_t>(count));
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#else
  (void)jobs;
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    slots[static_cast<std::size_t>(i)] = row_for(min + static_cast<std::uint64_t>(i));
  }
  std::vector<Row> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

std::string cell(std::optional<std::uint64_t> v) { return v ? std::to_string(*v) : std::string(); }

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::uint64_t parse_key(const std::string& text, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw FormatError("line " + std::to_string(line_no) + ": n = '" + text + "' is not an integer");
  }
  return v;
}

} // namespace

std::vector<GnbRow> gnb_range(std::uint64_t min, std::uint64_t max, unsigned kmax, int jobs) {
  return scan_parallel<GnbRow>(min, max, jobs, [&](std::uint64_t n) { return gnb_row(n, kmax); });
}

std::vector<EnbRow> enb_range(std::uint64_t min, std::uint64_t max, unsigned emax, int jobs) {
  return scan_parallel<EnbRow>(min, max, jobs, [&](std::uint64_t n) { return enb_row(n, emax); });
}

std::vector<ExtRow> ext_range(std::uint64_t min, std::uint64_t max, unsigned kmax, unsigned emax,
                              int jobs) {
  return scan_parallel<ExtRow>(min, max, jobs,
                               [&](std::uint64_t n) { return ext_row(n, kmax, emax); });
}

namespace serial {

std::vector<GnbRow> gnb_range(std::uint64_t min, std::uint64_t max, unsigned kmax) {
  return scan_serial<GnbRow>(min, max, [&](std::uint64_t n) { return gnb_row(n, kmax); });
}

std::vector<EnbRow> enb_range(std::uint64_t min, std::uint64_t max, unsigned emax) {
  return scan_serial<EnbRow>(min, max, [&](std::uint64_t n) { return enb_row(n, emax); });
}

std::vector<ExtRow> ext_range(std::uint64_t min, std::uint64_t max, unsigned kmax, unsigned emax) {
  return scan_serial<ExtRow>(min, max, [&](std::uint64_t n) { return ext_row(n, kmax, emax); });
}

} // namespace serial

bool kummer_admissible(std::uint64_t d) { return d % 2 == 0; }

std::vector<std::uint64_t> kummer_filter(std::span<const std::uint64_t> ds) {
  std::vector<std::uint64_t> out;
  std::copy_if(ds.begin(), ds.end(), std::back_inserter(out), kummer_admissible);
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& header(Schema schema) {
  static const std::vector<std::string> gnb{"n", "k"};
  static const std::vector<std::string> enb{"n", "embed"};
  static const std::vector<std::string> ext{"n",        "as_d",     "as_k",
                                            "witt_d",   "witt_k",   "kummer_d",
                                            "kummer_k", "kummer_admissible", "enb_embed"};
  switch (schema) {
  case Schema::Gnb:
    return gnb;
  case Schema::Enb:
    return enb;
  case Schema::Ext:
    return ext;
  }
  return gnb;
}

Table to_table(std::span<const GnbRow> rows) {
  Table t{Schema::Gnb, {}};
  for (const auto& r : rows) t.rows.push_back({std::to_string(r.n), std::to_string(r.k)});
  return t;
}

Table to_table(std::span<const EnbRow> rows) {
  Table t{Schema::Enb, {}};
  for (const auto& r : rows) t.rows.push_back({std::to_string(r.n), std::to_string(r.embed)});
  return t;
}

Table to_table(std::span<const ExtRow> rows) {
  Table t{Schema::Ext, {}};
  auto d_of = [](const std::optional<SubfieldBasis>& s) {
    return s ? std::optional<std::uint64_t>(s->d) : std::nullopt;
  };
  auto k_of = [](const std::optional<SubfieldBasis>& s) {
    return s ? std::optional<std::uint64_t>(s->k) : std::nullopt;
  };
  for (const auto& r : rows) {
    std::string admissible;
    if (r.kummer_admissible) admissible = *r.kummer_admissible ? "true" : "false";
    t.rows.push_back({std::to_string(r.n), cell(d_of(r.as2)), cell(k_of(r.as2)),
                      cell(d_of(r.witt4)), cell(k_of(r.witt4)), cell(d_of(r.kummer)),
                      cell(k_of(r.kummer)), admissible,
                      r.enb_embed ? std::to_string(*r.enb_embed) : std::string()});
  }
  return t;
}

std::string to_csv(const Table& table) {
  std::string out = join(header(table.schema)) + '\n';
  for (const auto& row : table.rows) out += join(row) + '\n';
  return out;
}

void emit_csv(const Table& table, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParameterError("cannot open '" + path.string() + "' for writing");
  file << to_csv(table);
}

Table parse_csv(const std::string& text, Schema schema) {
  if (text.find('\r') != std::string::npos) throw FormatError("CSV must use LF line endings");
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || split(line) != header(schema)) {
    throw FormatError("CSV header must be '" + join(header(schema)) + "'");
  }
  Table t{schema, {}};
  std::map<std::uint64_t, bool> seen;
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != header(schema).size()) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(header(schema).size()) + " cells, got " +
                        std::to_string(cells.size()));
    }
    const auto n = parse_key(cells[0], line_no);
    if (seen[n]) throw FormatError("line " + std::to_string(line_no) + ": duplicate n = " + cells[0]);
    seen[n] = true;
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table read_csv(const std::filesystem::path& path, Schema schema) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw FormatError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_csv(buf.str(), schema);
}

std::string DiffReport::to_string() const {
  std::string out;
  for (const auto& e : entries) {
    switch (e.kind) {
    case DiffEntry::Kind::Missing:
      out += "missing n=" + std::to_string(e.n) + ": golden '" + e.golden + "' not regenerated\n";
      break;
    case DiffEntry::Kind::Extra:
      out += "extra   n=" + std::to_string(e.n) + ": regenerated '" + e.generated +
             "' absent from golden\n";
      break;
    case DiffEntry::Kind::Changed:
      out += "changed n=" + std::to_string(e.n) + ": golden '" + e.golden + "' vs regenerated '" +
             e.generated + "'\n";
      break;
    }
  }
  return out;
}

DiffReport diff_tables(const Table& generated, const Table& golden) {
  if (generated.schema != golden.schema) throw ParameterError("diff_tables: schema mismatch");
  auto index = [](const Table& t) {
    std::map<std::uint64_t, std::string> m;
    for (std::size_t i = 0; i < t.rows.size(); ++i) m[parse_key(t.rows[i][0], i + 2)] = join(t.rows[i]);
    return m;
  };
  const auto gen = index(generated);
  const auto gold = index(golden);
  DiffReport report;
  auto g = gen.begin();
  auto o = gold.begin();
  while (g != gen.end() || o != gold.end()) {
    if (o == gold.end() || (g != gen.end() && g->first < o->first)) {
      report.entries.push_back({DiffEntry::Kind::Extra, g->first, "", g->second});
      ++g;
    } else if (g == gen.end() || o->first < g->first) {
      report.entries.push_back({DiffEntry::Kind::Missing, o->first, o->second, ""});
      ++o;
    } else {
      if (g->second != o->second) {
        report.entries.push_back({DiffEntry::Kind::Changed, g->first, o->second, g->second});
      }
      ++g;
      ++o;
    }
  }
  return report;
}

DiffReport diff_golden(const std::filesystem::path& generated,
                       const std::filesystem::path& golden, Schema schema) {
  return diff_tables(read_csv(generated, schema), read_csv(golden, schema));
}

} // namespace gf2nbasis::tables
