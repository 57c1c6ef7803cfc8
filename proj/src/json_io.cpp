#include "svir/json_io.hpp"

#include <complex>
#include <cstdint>

namespace svir {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw JsonSchemaError(path + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected array");
  return j;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected number");
  return j.get<double>();
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected integer");
  return j.get<std::int64_t>();
}

int small_int(const Json& j, const std::string& path) { return static_cast<int>(integer(j, path)); }

bool boolean(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected boolean");
  return j.get<bool>();
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected string");
  return j.get<std::string>();
}

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
  return {number(j[0], idx(path, 0)), number(j[1], idx(path, 1))};
}

Json cmatrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index b = 0; b < m.cols(); ++b) row.push_back(complex_to_json(m(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix cmatrix_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  const auto n = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = n > 0 ? static_cast<Eigen::Index>(array_at(j[0], idx(path, 0)).size()) : 0;
  ComplexMatrix m(n, cols);
  for (Eigen::Index a = 0; a < n; ++a) {
    const std::string rp = idx(path, static_cast<std::size_t>(a));
    const Json& row = array_at(j[static_cast<std::size_t>(a)], rp);
    if (static_cast<Eigen::Index>(row.size()) != cols) fail(rp, "ragged matrix row");
    for (Eigen::Index b = 0; b < cols; ++b)
      m(a, b) = complex_from_json(row[static_cast<std::size_t>(b)], idx(rp, static_cast<std::size_t>(b)));
  }
  return m;
}

Json cvector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index a = 0; a < v.size(); ++a) out.push_back(complex_to_json(v(a)));
  return out;
}

ComplexVector cvector_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t a = 0; a < j.size(); ++a) v(static_cast<Eigen::Index>(a)) = complex_from_json(j[a], idx(path, a));
  return v;
}

Json rvector_to_json(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index a = 0; a < v.size(); ++a) out.push_back(v(a));
  return out;
}

RealVector rvector_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t a = 0; a < j.size(); ++a) v(static_cast<Eigen::Index>(a)) = number(j[a], idx(path, a));
  return v;
}

Json imatrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index b = 0; b < m.cols(); ++b) row.push_back(m(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix imatrix_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  const auto n = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = n > 0 ? static_cast<Eigen::Index>(array_at(j[0], idx(path, 0)).size()) : 0;
  IntMatrix m(n, cols);
  for (Eigen::Index a = 0; a < n; ++a) {
    const std::string rp = idx(path, static_cast<std::size_t>(a));
    const Json& row = array_at(j[static_cast<std::size_t>(a)], rp);
    if (static_cast<Eigen::Index>(row.size()) != cols) fail(rp, "ragged matrix row");
    for (Eigen::Index b = 0; b < cols; ++b)
      m(a, b) = small_int(row[static_cast<std::size_t>(b)], idx(rp, static_cast<std::size_t>(b)));
  }
  return m;
}

Json document(const std::string& kind, Json payload) {
  return Json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

const Json& open_document(const Json& doc, const std::string& kind) {
  const std::string version = text(field(doc, "schema_version", "$"), "$.schema_version");
  if (version != kSchemaVersion)
    fail("$.schema_version", "unsupported schema version '" + version + "' (expected " + kSchemaVersion + ")");
  const std::string actual = text(field(doc, "kind", "$"), "$.kind");
  if (actual != kind) fail("$.kind", "expected '" + kind + "', got '" + actual + "'");
  return field(doc, "payload", "$");
}

Json invariant_payload(const InvariantMatrix& v) {
  return Json{{"m", v.m},
              {"z", imatrix_to_json(v.z)},
              {"ade_label", v.ade_label ? Json(*v.ade_label) : Json(nullptr)},
              {"first_row_only", v.first_row_only}};
}

InvariantMatrix invariant_from_payload(const Json& p, const std::string& path) {
  InvariantMatrix v;
  v.m = small_int(field(p, "m", path), path + ".m");
  v.z = imatrix_from_json(field(p, "z", path), path + ".z");
  const Json& label = field(p, "ade_label", path);
  if (!label.is_null()) v.ade_label = text(label, path + ".ade_label");
  v.first_row_only = boolean(field(p, "first_row_only", path), path + ".first_row_only");
  return v;
}

}  // namespace

Json rational_to_json(const Rational& r) {
  const auto [num, den] = r.to_int64();
  return Json{{"num", num}, {"den", den}};
}

Rational rational_from_json(const Json& j, const std::string& path) {
  const std::int64_t num = integer(field(j, "num", path), path + ".num");
  const std::int64_t den = integer(field(j, "den", path), path + ".den");
  if (den <= 0) fail(path + ".den", "denominator must be positive");
  return Rational(num, den);
}

Json sector_to_json(const SectorLabel& s) {
  return Json{{"j", s.j}, {"k", s.k}, {"l", s.l}, {"branch", to_string(s.branch)}};
}

SectorLabel sector_from_json(const Json& j, const std::string& path) {
  SectorLabel s;
  s.j = small_int(field(j, "j", path), path + ".j");
  s.k = small_int(field(j, "k", path), path + ".k");
  s.l = small_int(field(j, "l", path), path + ".l");
  const std::string b = text(field(j, "branch", path), path + ".branch");
  if (b == "none") s.branch = Branch::none;
  else if (b == "plus") s.branch = Branch::plus;
  else if (b == "minus") s.branch = Branch::minus;
  else fail(path + ".branch", "expected none|plus|minus");
  return s;
}

Json to_json(const LevelData& v) {
  Json weights = Json::array();
  for (const Rational& w : v.weights) weights.push_back(rational_to_json(w));
  return document("level_data", Json{{"level", v.level},
                                     {"s", cmatrix_to_json(v.s)},
                                     {"t", cvector_to_json(v.t)},
                                     {"weights", std::move(weights)},
                                     {"dims", rvector_to_json(v.dims)}});
}

LevelData level_data_from_json(const Json& doc) {
  const Json& p = open_document(doc, "level_data");
  const std::string path = "$.payload";
  LevelData v;
  v.level = small_int(field(p, "level", path), path + ".level");
  v.s = cmatrix_from_json(field(p, "s", path), path + ".s");
  v.t = cvector_from_json(field(p, "t", path), path + ".t");
  const Json& w = array_at(field(p, "weights", path), path + ".weights");
  for (std::size_t i = 0; i < w.size(); ++i) v.weights.push_back(rational_from_json(w[i], idx(path + ".weights", i)));
  v.dims = rvector_from_json(field(p, "dims", path), path + ".dims");
  return v;
}

Json to_json(const CosetModularData& v) {
  Json sectors = Json::array();
  Json labels = Json::array();
  Json spins = Json::array();
  Json h = Json::array();
  Json parity = Json::array();
  for (std::size_t a = 0; a < v.sectors.size(); ++a) {
    sectors.push_back(sector_to_json(v.sectors[a]));
    labels.push_back(describe(v.m, v.sectors[a]));
    spins.push_back(complex_to_json(conformal_spin(v.m, v.sectors[a])));
    h.push_back(v.h[a] ? rational_to_json(*v.h[a]) : Json(nullptr));
    parity.push_back(to_string(v.sigma_parity[a]));
  }
  Json payload{{"m", v.m},
               {"central_charge", rational_to_json(central_charge(v.m))},
               {"sectors", std::move(sectors)},
               {"labels", std::move(labels)},
               {"s", cmatrix_to_json(v.s)},
               {"t", cvector_to_json(v.t)},
               {"h", std::move(h)},
               {"spin", std::move(spins)},
               {"dims", rvector_to_json(v.dims)},
               {"is_ramond", v.is_ramond},
               {"sigma_parity", std::move(parity)}};
  return document("coset_data", std::move(payload));
}

CosetModularData coset_data_from_json(const Json& doc) {
  const Json& p = open_document(doc, "coset_data");
  const std::string path = "$.payload";
  CosetModularData v;
  v.m = small_int(field(p, "m", path), path + ".m");
  const Json& sectors = array_at(field(p, "sectors", path), path + ".sectors");
  for (std::size_t i = 0; i < sectors.size(); ++i)
    v.sectors.push_back(sector_from_json(sectors[i], idx(path + ".sectors", i)));
  v.s = cmatrix_from_json(field(p, "s", path), path + ".s");
  v.t = cvector_from_json(field(p, "t", path), path + ".t");
  const Json& h = array_at(field(p, "h", path), path + ".h");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_null()) v.h.emplace_back(std::nullopt);
    else v.h.emplace_back(rational_from_json(h[i], idx(path + ".h", i)));
  }
  v.dims = rvector_from_json(field(p, "dims", path), path + ".dims");
  const Json& ramond = array_at(field(p, "is_ramond", path), path + ".is_ramond");
  for (std::size_t i = 0; i < ramond.size(); ++i) v.is_ramond.push_back(boolean(ramond[i], idx(path + ".is_ramond", i)));
  const Json& parity = array_at(field(p, "sigma_parity", path), path + ".sigma_parity");
  for (std::size_t i = 0; i < parity.size(); ++i) {
    const std::string s = text(parity[i], idx(path + ".sigma_parity", i));
    if (s == "bose") v.sigma_parity.push_back(SigmaParity::bose);
    else if (s == "fermi") v.sigma_parity.push_back(SigmaParity::fermi);
    else fail(idx(path + ".sigma_parity", i), "expected bose|fermi");
  }
  const std::size_t n = v.sectors.size();
  if (v.s.rows() != static_cast<Eigen::Index>(n) || v.t.size() != static_cast<Eigen::Index>(n) ||
      v.h.size() != n || v.dims.size() != static_cast<Eigen::Index>(n) || v.is_ramond.size() != n ||
      v.sigma_parity.size() != n)
    fail(path, "field lengths disagree with the sector count");
  return v;
}

Json to_json(const InvariantMatrix& v) { return document("invariant", invariant_payload(v)); }

InvariantMatrix invariant_from_json(const Json& doc) {
  return invariant_from_payload(open_document(doc, "invariant"), "$.payload");
}

Json to_json(int m, SearchMode mode, const std::vector<InvariantMatrix>& v) {
  Json items = Json::array();
  for (const auto& inv : v) items.push_back(invariant_payload(inv));
  return document("invariant_list", Json{{"m", m},
                                         {"mode", mode == SearchMode::full ? "full" : "firstrow"},
                                         {"sectors", [&] {
                                            Json s = Json::array();
                                            for (const auto& x : enumerate_sectors(m)) s.push_back(sector_to_json(x));
                                            return s;
                                          }()},
                                         {"invariants", std::move(items)}});
}

std::vector<InvariantMatrix> invariant_list_from_json(const Json& doc) {
  const Json& p = open_document(doc, "invariant_list");
  const std::string path = "$.payload.invariants";
  const Json& items = array_at(field(p, "invariants", "$.payload"), path);
  std::vector<InvariantMatrix> out;
  for (std::size_t i = 0; i < items.size(); ++i) out.push_back(invariant_from_payload(items[i], idx(path, i)));
  return out;
}

Json to_json(const IndexReport& v) {
  Json kernels = Json::array();
  for (const auto& [s, d] : v.kernel_dims) kernels.push_back(Json{{"sector", sector_to_json(s)}, {"dim", d}});
  return document("index_report", Json{{"m", v.m},
                                       {"rho", sector_to_json(v.rho)},
                                       {"mu_b", v.mu_b},
                                       {"mu_a", v.mu_a},
                                       {"d_rho", v.d_rho},
                                       {"kernel_dims", std::move(kernels)},
                                       {"index_via_s", v.index_via_s},
                                       {"index_via_k", v.index_via_k},
                                       {"rounded_index", v.rounded_index}});
}

IndexReport index_report_from_json(const Json& doc) {
  const Json& p = open_document(doc, "index_report");
  const std::string path = "$.payload";
  IndexReport v;
  v.m = small_int(field(p, "m", path), path + ".m");
  v.rho = sector_from_json(field(p, "rho", path), path + ".rho");
  v.mu_b = number(field(p, "mu_b", path), path + ".mu_b");
  v.mu_a = number(field(p, "mu_a", path), path + ".mu_a");
  v.d_rho = number(field(p, "d_rho", path), path + ".d_rho");
  const Json& kernels = array_at(field(p, "kernel_dims", path), path + ".kernel_dims");
  for (std::size_t i = 0; i < kernels.size(); ++i) {
    const std::string kp = idx(path + ".kernel_dims", i);
    v.kernel_dims.emplace_back(sector_from_json(field(kernels[i], "sector", kp), kp + ".sector"),
                               small_int(field(kernels[i], "dim", kp), kp + ".dim"));
  }
  v.index_via_s = number(field(p, "index_via_s", path), path + ".index_via_s");
  v.index_via_k = number(field(p, "index_via_k", path), path + ".index_via_k");
  v.rounded_index = integer(field(p, "rounded_index", path), path + ".rounded_index");
  return v;
}

Json to_json(const McKeanSingerReport& v) {
  return document("mckean_singer_report", Json{{"dim_plus", v.dim_plus},
                                               {"dim_minus", v.dim_minus},
                                               {"ts", v.ts},
                                               {"supertraces", v.supertraces},
                                               {"index", v.index},
                                               {"max_deviation", v.max_deviation},
                                               {"max_spread", v.max_spread},
                                               {"tol", v.tol},
                                               {"pass", v.pass}});
}

McKeanSingerReport mckean_singer_report_from_json(const Json& doc) {
  const Json& p = open_document(doc, "mckean_singer_report");
  const std::string path = "$.payload";
  McKeanSingerReport v;
  v.dim_plus = small_int(field(p, "dim_plus", path), path + ".dim_plus");
  v.dim_minus = small_int(field(p, "dim_minus", path), path + ".dim_minus");
  const Json& ts = array_at(field(p, "ts", path), path + ".ts");
  for (std::size_t i = 0; i < ts.size(); ++i) v.ts.push_back(number(ts[i], idx(path + ".ts", i)));
  const Json& st = array_at(field(p, "supertraces", path), path + ".supertraces");
  for (std::size_t i = 0; i < st.size(); ++i) v.supertraces.push_back(number(st[i], idx(path + ".supertraces", i)));
  v.index = small_int(field(p, "index", path), path + ".index");
  v.max_deviation = number(field(p, "max_deviation", path), path + ".max_deviation");
  v.max_spread = number(field(p, "max_spread", path), path + ".max_spread");
  v.tol = number(field(p, "tol", path), path + ".tol");
  v.pass = boolean(field(p, "pass", path), path + ".pass");
  return v;
}

}  // namespace svir
