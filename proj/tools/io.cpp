#include "io.hpp"

#include "crlab/error.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace crlab::io {

namespace {

[[noreturn]] void parse_error(const std::string &what) {
  throw Error(ErrorKind::Parse, what);
}

std::size_t size_field(const Json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    parse_error(std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<std::size_t>();
}

Json string_list(const std::vector<Rational> &v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(entry_to_string(x));
  return a;
}

Json algebraic_matrix_to_json(const AlgMat &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(string_list(m(i, j).coeffs()));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json positions_to_json(const std::vector<std::pair<std::size_t, std::size_t>> &ps) {
  Json a = Json::array();
  for (const auto &[i, j] : ps)
    a.push_back({i, j});
  return a;
}

Json optional_size(const std::optional<std::size_t> &v) {
  return v ? Json(*v) : Json(nullptr);
}

} // namespace

std::string entry_to_string(const Rational &q) { return q.get_str(); }

Rational parse_entry(const std::string &s) {
  static const std::regex form(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(s, form))
    parse_error("bad entry \"" + s + "\"");
  if (const auto slash = s.find('/'); slash != std::string::npos &&
      s.find_first_not_of('0', slash + 1) == std::string::npos)
    parse_error("zero denominator in \"" + s + "\"");
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

Json matrix_to_json(const Mat &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(entry_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json &j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    parse_error("matrix must have " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      parse_error("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_string())
        parse_error("entries must be strings \"p\" or \"p/q\"");
      m(i, c) = parse_entry(j[i][c].get<std::string>());
    }
  }
  return m;
}

Json subspace_to_json(const MatrixSubspace &v) {
  Json j;
  if (v.is_square()) {
    j["ambient"] = v.rows();
  } else {
    j["rows"] = v.rows();
    j["cols"] = v.cols();
  }
  j["field"] = "Q";
  Json basis = Json::array();
  for (const auto &b : v.basis())
    basis.push_back(matrix_to_json(b));
  j["basis"] = std::move(basis);
  return j;
}

MatrixSubspace subspace_from_json(const Json &j) {
  if (!j.is_object())
    parse_error("subspace file must be a JSON object");
  std::size_t rows, cols;
  if (j.contains("ambient")) {
    rows = cols = size_field(j, "ambient");
  } else {
    rows = size_field(j, "rows");
    cols = size_field(j, "cols");
  }
  if (rows == 0 || cols == 0)
    parse_error("matrix size must be positive");
  if (!j.contains("field") || j["field"] != "Q")
    parse_error("field must be \"Q\"");
  if (!j.contains("basis") || !j["basis"].is_array())
    parse_error("missing basis list");
  std::vector<Mat> mats;
  for (const auto &m : j["basis"])
    mats.push_back(matrix_from_json(m, rows, cols));
  return MatrixSubspace::span(rows, cols, mats);
}

MatrixSubspace read_subspace(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    parse_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    parse_error(path + ": " + e.what());
  }
  return subspace_from_json(j);
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

void write_json(const Json &j, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << dump(j);
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << dump(j);
}

Json profile_to_json(const CommutatorProfile &p) {
  Json j;
  j["n"] = p.n;
  j["certified_lower"] = p.certified_lower;
  j["probable_max"] = p.probable_max;
  j["witness_trial"] = p.witness_trial;
  j["witness_a"] = matrix_to_json(p.witness_a);
  j["witness_b"] = matrix_to_json(p.witness_b);
  j["trials"] = p.trials;
  j["seed"] = p.seed;
  return j;
}

Json bound_report_to_json(const BoundReport &r) {
  Json j;
  j["status"] = to_string(r.status);
  j["dim"] = r.dim;
  j["k_hat"] = r.k_hat;
  j["bound"] = optional_size(r.bound);
  j["slack"] = r.bound ? Json(r.slack) : Json(nullptr);
  if (!r.interpretation.empty())
    j["interpretation"] = r.interpretation;
  return j;
}

Json rank_condition_to_json(const RankConditionResult &r) {
  Json j;
  j["k"] = r.k;
  j["verdict"] = to_string(r.verdict);
  j["certified_lower"] = r.profile.certified_lower;
  if (r.verdict == RankVerdict::CertifiedNo) {
    j["witness_a"] = matrix_to_json(r.profile.witness_a);
    j["witness_b"] = matrix_to_json(r.profile.witness_b);
  }
  j["trials"] = r.profile.trials;
  j["seed"] = r.profile.seed;
  return j;
}

Json flanders_to_json(const FlandersReport &r) {
  Json j;
  j["status"] = to_string(r.status);
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["dim"] = r.dim;
  j["k_hat"] = r.k_hat;
  j["bound"] = r.bound;
  j["slack"] = r.slack;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j;
}

Json triangularization_to_json(const TriangularizationResult &r) {
  Json j;
  j["n"] = r.n;
  j["used_extension"] = r.used_extension();
  if (r.change_of_basis)
    j["P"] = matrix_to_json(*r.change_of_basis);
  if (r.used_extension()) {
    j["extension_modulus"] = string_list(r.extension_modulus->coeffs());
    j["P_extended"] = algebraic_matrix_to_json(*r.extended_change_of_basis);
  }
  j["chain_dims"] = r.chain_dims;
  bool zero = true;
  for (const auto &c : r.certificate)
    zero = zero && c.is_zero();
  for (const auto &c : r.extended_certificate)
    zero = zero && c.is_zero();
  j["certificate_strictly_lower_zero"] = zero;
  return j;
}

Json spec_to_json(const InvariantSpaceSpec &s) {
  Json j;
  j["dim"] = s.dim();
  j["S"] = positions_to_json(s.positions());
  if (const auto p = s.partition())
    j["D"] = *p;
  else
    j["D_rows"] = matrix_to_json(s.d);
  return j;
}

Json search_to_json(const SearchReport &r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["rules"] = to_string(r.rules);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["max_dim"] = r.max_dim;
  j["bound"] = r.bound;
  j["matches_bound"] = r.matches_bound();
  j["enumerated"] = r.enumerated;
  j["pruned"] = r.pruned;
  j["sampled"] = r.sampled;
  Json a = Json::array();
  for (const auto &s : r.argmax)
    a.push_back(spec_to_json(s));
  j["argmax"] = std::move(a);
  return j;
}

Json structure_to_json(const StructureVerdict &v) {
  Json j;
  j["status"] = to_string(v.status);
  if (!v.tag.empty())
    j["tag"] = v.tag;
  j["transposed"] = v.transposed;
  j["n"] = v.n;
  j["dim"] = v.dim;
  j["k_hat"] = v.k_hat;
  j["bound"] = optional_size(v.bound);
  j["l"] = optional_size(v.l);
  j["chain_dims"] = v.chain_dims;
  j["U1"] = matrix_to_json(v.u1);
  j["U2"] = matrix_to_json(v.u2);
  j["witness_basis"] = v.witness ? matrix_to_json(*v.witness) : Json(nullptr);
  if (!v.diagnostics.empty())
    j["diagnostics"] = v.diagnostics;
  j["trials"] = v.trials;
  j["seed"] = v.seed;
  return j;
}

Json algebra_report_to_json(const AlgebraStructureReport &r) {
  Json j;
  j["status"] = to_string(r.status);
  j["is_algebra"] = r.is_algebra;
  j["dim"] = r.dim;
  j["bound"] = optional_size(r.bound);
  j["equality"] = r.equality;
  j["structure_status"] = to_string(r.structure.status);
  return j;
}

Json error_to_json(const Error &e) {
  Json err;
  err["kind"] = std::string(to_string(e.kind()));
  err["message"] = e.what();
  if (const auto &w = e.witness()) {
    err["witness"] = {{"first", w->first},
                      {"second", w->second},
                      {"commutator_rank", w->commutator_rank}};
  }
  return Json{{"error", err}};
}

} // namespace crlab::io
