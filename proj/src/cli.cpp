#include "gf2nbasis/cli.hpp"

#include "gf2nbasis/algebraic.hpp"
#include "gf2nbasis/error.hpp"
#include "gf2nbasis/gauss.hpp"
#include "gf2nbasis/gf2x.hpp"
#include "gf2nbasis/tables.hpp"
#include "gf2nbasis/towers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#ifndef GF2NBASIS_DEFAULT_GOLDEN_DIR
#define GF2NBASIS_DEFAULT_GOLDEN_DIR "tables"
#endif

namespace gf2nbasis::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Format { Text, Csv, Json };

struct Global {
  Format format = Format::Text;
  int jobs = 0;
};

/// Table commands write here and optionally diff against a golden file.
struct TableOutput {
  std::string out = "-";
  std::string golden;
};

class GoldenMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

fs::path golden_dir() {
  if (const char* env = std::getenv("GF2NBASIS_GOLDEN_DIR"); env && *env) return env;
  return GF2NBASIS_DEFAULT_GOLDEN_DIR;
}

// Relative paths that do not exist from the working directory are looked up
// in the golden directory, first as given and then by file name.
fs::path resolve_golden(const std::string& arg) {
  const fs::path p(arg);
  if (p.is_absolute() || fs::exists(p)) return p;
  const fs::path dir = golden_dir();
  if (fs::exists(dir / p)) return dir / p;
  return dir / p.filename();
}

json cell_to_json(const std::string& cell) {
  if (cell.empty()) return nullptr;
  if (cell == "true") return true;
  if (cell == "false") return false;
  return std::stoull(cell);
}

std::string render(const tables::Table& t, Format format) {
  if (format != Format::Json) return tables::to_csv(t);
  json rows = json::array();
  const auto& head = tables::header(t.schema);
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < head.size(); ++i) obj[head[i]] = cell_to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParameterError("cannot open '" + path + "' for writing");
  file << text;
}

void emit_table(const tables::Table& t, const Global& g, const TableOutput& to, std::ostream& out,
                std::ostream& err) {
  write_to(to.out, render(t, g.format), out);
  if (to.golden.empty()) return;
  const auto path = resolve_golden(to.golden);
  const auto report = tables::diff_tables(t, tables::read_csv(path, t.schema));
  if (!report.empty()) {
    err << "golden mismatch against " << path.string() << ":\n" << report.to_string();
    throw GoldenMismatch(std::to_string(report.entries.size()) + " differing rows");
  }
  err << "golden match: " << path.string() << " (" << t.rows.size() << " rows)\n";
}

template <typename T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

/// Scalar results: one key/value record rendered per format.
void emit_record(const std::vector<std::pair<std::string, json>>& fields, const std::string& text,
                 const Global& g, std::ostream& out) {
  switch (g.format) {
  case Format::Text:
    out << text << "\n";
    break;
  case Format::Csv: {
    std::string head, row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) {
        head += ',';
        row += ',';
      }
      head += fields[i].first;
      const auto& v = fields[i].second;
      if (v.is_string()) {
        const auto s = v.get<std::string>();
        row += s.find(',') == std::string::npos ? s : "\"" + s + "\"";
      } else if (!v.is_null()) {
        row += v.dump();
      }
    }
    out << head << "\n" << row << "\n";
    break;
  }
  case Format::Json: {
    json obj = json::object();
    for (const auto& [k, v] : fields) obj[k] = v;
    out << obj.dump(2) << "\n";
    break;
  }
  }
}

// ---------------------------------------------------------------------------
// bench crossover

template <typename F>
double median_ns(int samples, F&& f) {
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    t.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  std::nth_element(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.end());
  return std::max(t[t.size() / 2], 1.0);
}

gf2x::BinaryPolynomial random_poly(std::mt19937_64& gen, std::size_t degree) {
  std::vector<gf2x::Word> w(degree / gf2x::kWordBits + 1);
  for (auto& x : w) x = gen();
  const std::size_t top = degree % gf2x::kWordBits;
  if (top + 1 < gf2x::kWordBits) w.back() &= (gf2x::Word{1} << (top + 1)) - 1;
  w.back() |= gf2x::Word{1} << top;
  return gf2x::BinaryPolynomial::from_words(std::move(w));
}

void bench_crossover(std::size_t min_deg, std::size_t max_deg, int samples, std::ostream& out) {
  if (min_deg < 1) throw ParameterError("bench crossover: --min-deg must be at least 1");
  if (max_deg < min_deg) throw ParameterError("bench crossover: --max-deg below --min-deg");
  if (samples < 1) throw ParameterError("bench crossover: --samples must be positive");
  std::mt19937_64 gen(2024);
  volatile std::size_t sink = 0;
  out << "degree,algorithm,ns_per_op\n";
  for (std::size_t deg = min_deg; deg <= max_deg; deg *= 2) {
    const auto a = random_poly(gen, deg), b = random_poly(gen, deg);
    const double school = median_ns(samples, [&] { sink = sink + gf2x::mul_schoolbook(a, b).words().size(); });
    const double kara = median_ns(samples, [&] { sink = sink + gf2x::mul_karatsuba(a, b).words().size(); });
    out << deg << ",schoolbook," << school << "\n";
    out << deg << ",karatsuba," << kara << "\n";
    if (deg > max_deg / 2) break;
  }
  // GNB products for bases from the n >= 250 range.
  for (auto [n, k] : {std::pair{251, 2}, std::pair{268, 1}, std::pair{250, 9}, std::pair{253, 10},
                      std::pair{599, 8}}) {
    const auto p = gauss::build_params(n, k);
    auto x = gauss::GnbElement::zero(p), y = gauss::GnbElement::zero(p);
    for (int i = 0; i < n; ++i) {
      x.set_coord(static_cast<std::size_t>(i), gen() & 1);
      y.set_coord(static_cast<std::size_t>(i), gen() & 1);
    }
    const double t = median_ns(samples, [&] { sink = sink + gauss::gnb_mul(x, y).weight(); });
    out << n << ",gnb_type_" << k << "," << t << "\n";
  }
  (void)sink;
}

// ---------------------------------------------------------------------------

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Text;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal bases and tower extensions of binary fields", "gf2nbasis"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  Global g;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for table scans (0: all available)")
      ->check(CLI::NonNegativeNumber);

  std::function<void()> action;

  // gnb ---------------------------------------------------------------------
  auto* gnb = app.add_subcommand("gnb", "Gauss period normal bases");
  gnb->require_subcommand(1);

  std::uint64_t n = 0, k = 0;
  unsigned kmax = 10, emax = 20;
  std::uint64_t min = 0, max = 0;
  TableOutput to;

  auto* lowest = gnb->add_subcommand("lowest", "Lowest GNB type of F_{2^n}");
  lowest->add_option("--n", n, "Extension degree")->required()->check(CLI::Range(2, 1 << 24));
  lowest->add_option("--kmax", kmax, "Largest type searched")->capture_default_str()->check(CLI::Range(1, 1000));
  lowest->callback([&] {
    action = [&] {
      const auto t = gauss::lowest_type(n, kmax);
      emit_record({{"n", n}, {"k", optional_json(t)}}, optional_text(t), g, out);
    };
  });

  auto add_table_flags = [&](CLI::App* sub) {
    sub->add_option("--min", min, "First n")->required()->check(CLI::Range(2, 1 << 24));
    sub->add_option("--max", max, "Last n")->required()->check(CLI::Range(2, 1 << 24));
    sub->add_option("--out", to.out, "Output path, - for stdout")->capture_default_str();
    sub->add_option("--golden", to.golden, "Golden CSV to diff against");
  };

  auto* gnb_table = gnb->add_subcommand("table", "Lowest GNB types over a range of n");
  add_table_flags(gnb_table);
  gnb_table->add_option("--kmax", kmax, "Largest type searched")->capture_default_str()->check(CLI::Range(1, 1000));
  gnb_table->callback([&] {
    action = [&] {
      const auto rows = tables::gnb_range(min, max, kmax, g.jobs);
      emit_table(tables::to_table(std::span<const tables::GnbRow>(rows)), g, to, out, err);
    };
  });

  std::string hex_a, hex_b;
  auto* gnb_mul = gnb->add_subcommand("mul", "Product of two elements in the type (n, k) basis");
  gnb_mul->add_option("--n", n, "Extension degree")->required();
  gnb_mul->add_option("--k", k, "Type")->required();
  gnb_mul->add_option("--a", hex_a, "First factor, hex coordinates")->required();
  gnb_mul->add_option("--b", hex_b, "Second factor, hex coordinates")->required();
  gnb_mul->callback([&] {
    action = [&] {
      const auto p = gauss::build_params(n, k);
      const auto c = gauss::gnb_mul(gauss::GnbElement::from_hex(p, hex_a),
                                    gauss::GnbElement::from_hex(p, hex_b));
      emit_record({{"n", n}, {"k", k}, {"product", c.to_hex()}}, c.to_hex(), g, out);
    };
  });

  auto* complexity = gnb->add_subcommand("complexity", "Multiplication table complexity");
  complexity->add_option("--n", n, "Extension degree")->required();
  complexity->add_option("--k", k, "Type")->required();
  complexity->callback([&] {
    action = [&] {
      const auto t = gauss::mult_table(gauss::build_params(n, k));
      const auto b = gauss::complexity_bounds(n, k);
      std::ostringstream text;
      text << t.complexity;
      emit_record({{"n", n},
                   {"k", k},
                   {"complexity", t.complexity},
                   {"lower", b.lower},
                   {"upper", b.upper},
                   {"exact", optional_json(b.exact)}},
                  text.str(), g, out);
    };
  });

  // nq ----------------------------------------------------------------------
  std::uint64_t q = 0;
  auto* nq = app.add_subcommand("nq", "The integer n_q for degree n over F_q");
  nq->add_option("--n", n, "Degree")->required()->check(CLI::PositiveNumber);
  nq->add_option("--q", q, "Prime power")->required();
  nq->callback([&] {
    action = [&] {
      const auto prof = algebraic::compute_nq(n, q);
      json per = json::array();
      for (const auto& pv : prof.per_prime) {
        per.push_back({{"prime", pv.prime},
                       {"v_n", pv.v_n},
                       {"v_q_minus_1", pv.v_q_minus_1},
                       {"v_nq", pv.v_nq}});
      }
      if (g.format == Format::Json) {
        out << json{{"n", n}, {"q", q}, {"nq", prof.nq}, {"per_prime", per}}.dump(2) << "\n";
      } else {
        emit_record({{"n", n}, {"q", q}, {"nq", prof.nq}}, std::to_string(prof.nq), g, out);
      }
    };
  });

  // enb ---------------------------------------------------------------------
  auto* enb = app.add_subcommand("enb", "Normal bases from algebraic groups");
  enb->require_subcommand(1);

  std::string mechanism_name = "elliptic";
  auto* embed = enb->add_subcommand("embed", "Smallest embedding degree e <= emax");
  embed->add_option("--n", n, "Extension degree")->required()->check(CLI::Range(4, 1 << 30));
  embed->add_option("--emax", emax, "Largest embedding degree")->capture_default_str()->check(CLI::Range(2, 20));
  embed->add_option("--mechanism", mechanism_name, "Group used")
      ->check(CLI::IsMember({"elliptic", "multiplicative"}))
      ->capture_default_str();
  embed->callback([&] {
    action = [&] {
      const auto r = algebraic::embedding_degree(n, emax, *algebraic::parse_mechanism(mechanism_name));
      emit_record({{"n", n},
                   {"embed", optional_json(r.embed)},
                   {"d", optional_json(r.d)},
                   {"mechanism", std::string(algebraic::to_string(r.mechanism))}},
                  optional_text(r.embed), g, out);
    };
  });

  auto* enb_table = enb->add_subcommand("table", "Elliptic embedding degrees over a range of n");
  add_table_flags(enb_table);
  enb_table->add_option("--emax", emax, "Largest embedding degree")->capture_default_str()->check(CLI::Range(2, 20));
  enb_table->callback([&] {
    action = [&] {
      if (min < 4) throw ParameterError("enb table needs --min >= 4");
      const auto rows = tables::enb_range(min, max, emax, g.jobs);
      emit_table(tables::to_table(std::span<const tables::EnbRow>(rows)), g, to, out, err);
    };
  });

  // ext ---------------------------------------------------------------------
  auto* ext = app.add_subcommand("ext", "Extended bases for n without a low-type GNB");
  ext->require_subcommand(1);
  auto* ext_table = ext->add_subcommand("table", "Tower and elliptic workarounds over a range of n");
  add_table_flags(ext_table);
  ext_table->add_option("--kmax", kmax, "Largest type searched")->capture_default_str()->check(CLI::Range(1, 1000));
  ext_table->add_option("--emax", emax, "Largest embedding degree")->capture_default_str()->check(CLI::Range(2, 20));
  ext_table->callback([&] {
    action = [&] {
      const auto rows = tables::ext_range(min, max, kmax, emax, g.jobs);
      emit_table(tables::to_table(std::span<const tables::ExtRow>(rows)), g, to, out, err);
    };
  });

  // tower -------------------------------------------------------------------
  auto* tower = app.add_subcommand("tower", "Tower extensions over a GNB subfield");
  tower->require_subcommand(1);
  std::string form_name, xs, ys;
  std::uint64_t d = 0;
  auto* tmul = tower->add_subcommand("mul", "Product of two tower elements");
  tmul->add_option("--form", form_name, "Tower form")
      ->required()
      ->check(CLI::IsMember({"as2", "witt4", "kummer3"}));
  tmul->add_option("--d", d, "Subfield degree")->required();
  tmul->add_option("--k", k, "Subfield GNB type")->required();
  tmul->add_option("--x", xs, "First factor, comma-separated hex blocks")->required();
  tmul->add_option("--y", ys, "Second factor, comma-separated hex blocks")->required();
  tmul->callback([&] {
    action = [&] {
      const auto t = towers::build_tower(gauss::build_params(d, k), *towers::parse_form(form_name));
      const auto p = towers::tower_mul(towers::TowerElement::parse(t, xs),
                                       towers::TowerElement::parse(t, ys));
      emit_record({{"form", form_name},
                   {"product", p.value.to_string()},
                   {"subfield_muls", p.counts.subfield_muls},
                   {"table_applications", p.counts.table_applications},
                   {"subfield_adds", p.counts.subfield_adds}},
                  p.value.to_string(), g, out);
    };
  });

  // bench -------------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Timing reports");
  bench->require_subcommand(1);
  std::size_t min_deg = 64, max_deg = 16384;
  int samples = 100;
  auto* crossover = bench->add_subcommand("crossover", "Schoolbook vs Karatsuba, plus GNB products");
  crossover->add_option("--min-deg", min_deg, "Smallest degree")->capture_default_str();
  crossover->add_option("--max-deg", max_deg, "Largest degree")->capture_default_str();
  crossover->add_option("--samples", samples, "Runs per measurement")->capture_default_str();
  crossover->callback([&] { action = [&] { bench_crossover(min_deg, max_deg, samples, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  g.format = parse_format(format_name);
  if (!action) {
    err << app.help();
    return kUsage;
  }
  try {
    action();
  } catch (const GoldenMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kGoldenMismatch;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kDomain;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

} // namespace gf2nbasis::cli
