#include "svir/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "svir/json_io.hpp"
#include "svir/verification.hpp"

namespace svir {

namespace {

// The printed tables are rendered from the JSON documents, never from the
// in-memory structures, so everything shown is recoverable from --json.

std::string fmt(double x, int precision = 10) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

std::string rational_text(const Json& r) {
  if (r.is_null()) return "-";
  const auto den = r.at("den").get<long long>();
  const auto num = r.at("num").get<long long>();
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string complex_text(const Json& z) {
  const double re = z.at(0).get<double>();
  const double im = z.at(1).get<double>();
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << std::showpos << re << im << "i";
  return os.str();
}

std::string sector_text(const Json& s) {
  std::ostringstream os;
  os << "(" << s.at("j").get<int>() << "," << s.at("k").get<int>() << "," << s.at("l").get<int>() << ")";
  const std::string b = s.at("branch").get<std::string>();
  if (b == "plus") os << "+";
  if (b == "minus") os << "-";
  return os.str();
}

void print_complex_matrix(std::ostream& out, const std::string& name, const Json& rows) {
  out << name << ":\n";
  for (const Json& row : rows) {
    out << " ";
    for (const Json& z : row) out << " " << std::setw(22) << complex_text(z);
    out << "\n";
  }
}

void render_level(std::ostream& out, const Json& doc) {
  const Json& p = doc.at("payload");
  out << "SU(2) level " << p.at("level").get<int>() << "\n";
  out << std::left << std::setw(5) << "j" << std::setw(12) << "h" << std::setw(16) << "d" << "T\n";
  for (std::size_t j = 0; j < p.at("weights").size(); ++j)
    out << std::setw(5) << j << std::setw(12) << rational_text(p.at("weights")[j]) << std::setw(16)
        << fmt(p.at("dims")[j].get<double>()) << complex_text(p.at("t")[j]) << "\n";
  out << std::right;
  print_complex_matrix(out, "S", p.at("s"));
}

void render_coset(std::ostream& out, const Json& doc) {
  const Json& p = doc.at("payload");
  out << "coset m=" << p.at("m").get<int>() << ", c = " << rational_text(p.at("central_charge")) << ", "
      << p.at("sectors").size() << " sectors\n";
  out << std::left << std::setw(20) << "sector" << std::setw(10) << "h" << std::setw(24) << "spin" << std::setw(14)
      << "d" << std::setw(4) << "" << "sigma\n";
  for (std::size_t a = 0; a < p.at("sectors").size(); ++a)
    out << std::setw(20) << p.at("labels")[a].get<std::string>() << std::setw(10) << rational_text(p.at("h")[a])
        << std::setw(24) << complex_text(p.at("spin")[a]) << std::setw(14) << fmt(p.at("dims")[a].get<double>(), 8)
        << std::setw(4) << (p.at("is_ramond")[a].get<bool>() ? "R" : "NS")
        << p.at("sigma_parity")[a].get<std::string>() << "\n";
  out << std::right;
  print_complex_matrix(out, "S", p.at("s"));
  out << "T:\n";
  for (const Json& z : p.at("t")) out << "  " << complex_text(z) << "\n";
}

void render_invariants(std::ostream& out, const Json& doc) {
  const Json& p = doc.at("payload");
  const Json& sectors = p.at("sectors");
  const Json& items = p.at("invariants");
  out << "m=" << p.at("m").get<int>() << ", mode " << p.at("mode").get<std::string>() << ": " << items.size()
      << (items.size() == 1 ? " invariant\n" : " invariants\n");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Json& inv = items[i];
    const Json& z = inv.at("z");
    out << "#" << i + 1 << " " << (inv.at("ade_label").is_null() ? "unlabeled" : inv.at("ade_label").get<std::string>())
        << "\n  vacuum row:";
    bool first = true;
    for (std::size_t b = 0; b < sectors.size(); ++b) {
      const int c = z.at(0).at(b).get<int>();
      if (c == 0) continue;
      out << (first ? " " : " + ") << (c == 1 ? "" : std::to_string(c)) << sector_text(sectors[b]);
      first = false;
    }
    out << "\n";
    if (inv.at("first_row_only").get<bool>()) continue;
    for (const Json& row : z) {
      out << "   ";
      for (const Json& v : row) out << " " << v.get<int>();
      out << "\n";
    }
  }
}

void render_index(std::ostream& out, const Json& doc) {
  const Json& p = doc.at("payload");
  out << "m=" << p.at("m").get<int>() << ", rho = " << sector_text(p.at("rho")) << "\n"
      << "mu_b = " << fmt(p.at("mu_b").get<double>()) << ", mu_a = " << fmt(p.at("mu_a").get<double>())
      << ", d_rho = " << fmt(p.at("d_rho").get<double>()) << "\n";
  out << "kernel dimensions:";
  for (const Json& k : p.at("kernel_dims")) out << " " << sector_text(k.at("sector")) << "=" << k.at("dim").get<int>();
  out << "\nindex via S = " << fmt(p.at("index_via_s").get<double>(), 15)
      << "\nindex via K = " << fmt(p.at("index_via_k").get<double>(), 15)
      << "\nrounded_index = " << p.at("rounded_index").get<long long>() << "\n";
}

void render_mckean_singer(std::ostream& out, const Json& doc) {
  const Json& p = doc.at("payload");
  out << "dims (" << p.at("dim_plus").get<int>() << "," << p.at("dim_minus").get<int>()
      << "), index = " << p.at("index").get<int>() << "\n";
  for (std::size_t i = 0; i < p.at("ts").size(); ++i)
    out << "  t = " << std::setw(8) << fmt(p.at("ts")[i].get<double>()) << "  Str = "
        << fmt(p.at("supertraces")[i].get<double>(), 17) << "\n";
  out << "max deviation " << fmt(p.at("max_deviation").get<double>(), 3) << ", spread "
      << fmt(p.at("max_spread").get<double>(), 3) << ", tol " << fmt(p.at("tol").get<double>(), 3) << ": "
      << (p.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
}

// Odd m falls through to fredholm_index, which reports the missing sector.
SectorLabel branch_label(int m, const std::string& branch) {
  if (m >= 3 && !has_fixed_point(m)) return SectorLabel{};
  return fixed_point(m, branch == "plus" ? Branch::plus : Branch::minus);
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular data, invariants and indices of the N=1 super-Virasoro cosets", "svir"};
  app.require_subcommand(1);
  bool json = false;

  int level = 0;
  auto* su2 = app.add_subcommand("su2", "SU(2)_k modular data");
  su2->add_option("--level", level, "level k")->required()->check(CLI::NonNegativeNumber);
  su2->add_flag("--json", json, "print JSON");

  int m = 0;
  auto* coset = app.add_subcommand("coset", "coset sectors and modular data");
  coset->add_option("--m", m, "coset parameter m >= 3")->required();
  coset->add_flag("--json", json, "print JSON");

  std::string mode = "full";
  bool allow_large = false;
  auto* inv = app.add_subcommand("invariants", "enumerate modular invariants");
  inv->add_option("--m", m, "coset parameter m >= 3")->required();
  inv->add_option("--mode", mode, "full or firstrow")->check(CLI::IsMember({"full", "firstrow"}));
  inv->add_flag("--allow-large", allow_large, "allow full mode above m = 12");
  inv->add_flag("--json", json, "print JSON");

  std::string branch = "plus";
  auto* index = app.add_subcommand("index", "Fredholm index of the supersymmetric Ramond sector");
  index->add_option("--m", m, "even coset parameter m >= 4")->required();
  index->add_option("--branch", branch, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  index->add_flag("--json", json, "print JSON");

  std::vector<int> dims;
  std::uint64_t seed = 0;
  std::vector<double> ts;
  int planted = 0;
  double ms_tol = 1e-8;
  auto* ms = app.add_subcommand("mckean-singer", "heat supertrace of a random graded operator");
  ms->add_option("--dims", dims, "P,Q")->required()->delimiter(',')->expected(2);
  ms->add_option("--seed", seed, "RNG seed")->required();
  ms->add_option("--ts", ts, "T1,T2,...")->required()->delimiter(',');
  ms->add_option("--planted", planted, "number of zero columns planted in Q_+")->check(CLI::NonNegativeNumber);
  ms->add_option("--tol", ms_tol, "tolerance")->check(CLI::PositiveNumber);
  ms->add_flag("--json", json, "print JSON");

  std::vector<int> verify_ms;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--m", verify_ms, "M1,M2,... for the per-m checks")->delimiter(',');
  verify->add_flag("--json", json, "print JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (su2->parsed()) {
      const Json doc = to_json(build_level_data(level));
      if (json) out << doc.dump(2) << "\n";
      else render_level(out, doc);
      return 0;
    }
    if (coset->parsed()) {
      const Json doc = to_json(build_coset_data(m));
      if (json) out << doc.dump(2) << "\n";
      else render_coset(out, doc);
      return 0;
    }
    if (inv->parsed()) {
      const SearchMode sm = mode == "full" ? SearchMode::full : SearchMode::firstrow;
      SearchOptions opts;
      opts.allow_large = allow_large;
      const Json doc = to_json(m, sm, enumerate_invariants(m, sm, opts));
      if (json) out << doc.dump(2) << "\n";
      else render_invariants(out, doc);
      return 0;
    }
    if (index->parsed()) {
      const Json doc = to_json(fredholm_index(m, branch_label(m, branch)));
      if (json) out << doc.dump(2) << "\n";
      else render_index(out, doc);
      return 0;
    }
    if (ms->parsed()) {
      if (planted > dims[0]) throw UsageError("--planted exceeds dim_plus");
      const GradedOperator g = make_graded_operator(dims[0], dims[1], seed, planted);
      const McKeanSingerReport report = verify_mckean_singer(g, ts, ms_tol);
      const Json doc = to_json(report);
      if (json) out << doc.dump(2) << "\n";
      else render_mckean_singer(out, doc);
      return report.pass ? 0 : 1;
    }
    if (verify->parsed()) {
      VerifyOptions opts = verify_options_from_env();
      opts.ms = verify_ms;
      const std::vector<CriterionResult> results = run_acceptance(opts);
      const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      if (json) {
        Json items = Json::array();
        for (const auto& r : results)
          items.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        out << Json{{"schema_version", kSchemaVersion},
                    {"kind", "verification_report"},
                    {"payload", Json{{"tol", opts.tol}, {"criteria", std::move(items)}, {"all_passed", all}}}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& r : results) out << format_result(r) << "\n";
        const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
        out << passed << "/" << results.size() << " criteria passed\n";
      }
      return all ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace svir
