#include "skt/model_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace skt {

std::string format_scalar(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

double parse_scalar(const std::string& tok, int line) {
  const auto slash = tok.find('/');
  char* end = nullptr;
  if (slash != std::string::npos) {
    const std::string num = tok.substr(0, slash);
    const std::string den = tok.substr(slash + 1);
    const long long a = std::strtoll(num.c_str(), &end, 10);
    if (end == num.c_str() || *end) throw ParseError(line, "bad rational: " + tok);
    const long long b = std::strtoll(den.c_str(), &end, 10);
    if (end == den.c_str() || *end || b == 0)
      throw ParseError(line, "bad rational: " + tok);
    return double(a) / double(b);
  }
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end) throw ParseError(line, "bad scalar: " + tok);
  return v;
}

int parse_index(const std::string& tok, int dim, int line) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end || v < 1 || v > dim)
    throw ParseError(line, "index out of range: " + tok);
  return int(v) - 1;
}

}  // namespace

ModelDocument parse_model_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  int dim = 0;
  std::vector<std::string> basis;
  std::vector<Eigen::MatrixXd> structure;
  Eigen::MatrixXd metric, j;
  int metric_rows_seen = -1;  // -1: no metric yet; otherwise rows filled
  bool metric_done = false;
  int j_pairs_seen = -1;
  int j_rows_seen = -1;
  std::map<std::string, std::string> meta;

  const auto require_dim = [&](int line) {
    if (dim == 0) throw ParseError(line, "dim must come first");
  };

  while (std::getline(in, raw)) {
    ++lineno;
    const std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& key = tok[0];

    if (key == "dim") {
      if (dim != 0) throw ParseError(lineno, "duplicate dim");
      if (tok.size() != 2) throw ParseError(lineno, "dim takes one value");
      char* end = nullptr;
      const long v = std::strtol(tok[1].c_str(), &end, 10);
      if (end == tok[1].c_str() || *end || v < 4 || v > kMaxDim || v % 2)
        throw ParseError(lineno, "dim must be even, between 4 and 16");
      dim = int(v);
      structure.assign(std::size_t(dim), Eigen::MatrixXd::Zero(dim, dim));
      metric = Eigen::MatrixXd::Zero(dim, dim);
      j = Eigen::MatrixXd::Zero(dim, dim);
    } else if (key == "basis") {
      require_dim(lineno);
      if (!basis.empty()) throw ParseError(lineno, "duplicate basis");
      if (int(tok.size()) != dim + 1)
        throw ParseError(lineno, "basis needs exactly dim names");
      basis.assign(tok.begin() + 1, tok.end());
    } else if (key == "bracket") {
      require_dim(lineno);
      if (tok.size() != 5)
        throw ParseError(lineno, "bracket takes i j k scalar");
      const int i = parse_index(tok[1], dim, lineno);
      const int jj = parse_index(tok[2], dim, lineno);
      const int k = parse_index(tok[3], dim, lineno);
      if (i == jj) throw ParseError(lineno, "bracket needs i != j (antisymmetry)");
      const double c = parse_scalar(tok[4], lineno);
      structure[std::size_t(k)](i, jj) += c;
      structure[std::size_t(k)](jj, i) -= c;
    } else if (key == "metric") {
      require_dim(lineno);
      if (metric_done) throw ParseError(lineno, "metric already complete");
      if (tok.size() < 2) throw ParseError(lineno, "metric needs a mode");
      if (tok[1] == "diag") {
        if (metric_rows_seen != -1)
          throw ParseError(lineno, "metric mode mixed");
        if (int(tok.size()) != dim + 2)
          throw ParseError(lineno, "metric diag needs dim values");
        for (int i = 0; i < dim; ++i)
          metric(i, i) = parse_scalar(tok[std::size_t(i) + 2], lineno);
        metric_done = true;
      } else if (tok[1] == "row") {
        if (int(tok.size()) != dim + 2)
          throw ParseError(lineno, "metric row needs dim values");
        if (metric_rows_seen == -1) metric_rows_seen = 0;
        if (metric_rows_seen >= dim)
          throw ParseError(lineno, "too many metric rows");
        for (int i = 0; i < dim; ++i)
          metric(metric_rows_seen, i) = parse_scalar(tok[std::size_t(i) + 2], lineno);
        if (++metric_rows_seen == dim) metric_done = true;
      } else {
        throw ParseError(lineno, "metric mode must be diag or row");
      }
    } else if (key == "J") {
      require_dim(lineno);
      if (tok.size() < 2) throw ParseError(lineno, "J needs a mode");
      if (tok[1] == "pair") {
        if (j_rows_seen != -1) throw ParseError(lineno, "J mode mixed");
        if (tok.size() != 4) throw ParseError(lineno, "J pair takes i j");
        const int a = parse_index(tok[2], dim, lineno);
        const int b = parse_index(tok[3], dim, lineno);
        if (a == b) throw ParseError(lineno, "J pair needs distinct indices");
        if (j.col(a).any() || j.col(b).any())
          throw ParseError(lineno, "J pair reuses an index");
        // J e_a = e_b, J e_b = -e_a
        j(b, a) = 1.0;
        j(a, b) = -1.0;
        if (j_pairs_seen == -1) j_pairs_seen = 0;
        ++j_pairs_seen;
      } else if (tok[1] == "row") {
        if (j_pairs_seen != -1) throw ParseError(lineno, "J mode mixed");
        if (int(tok.size()) != dim + 2)
          throw ParseError(lineno, "J row needs dim values");
        if (j_rows_seen == -1) j_rows_seen = 0;
        if (j_rows_seen >= dim) throw ParseError(lineno, "too many J rows");
        for (int i = 0; i < dim; ++i)
          j(j_rows_seen, i) = parse_scalar(tok[std::size_t(i) + 2], lineno);
        ++j_rows_seen;
      } else {
        throw ParseError(lineno, "J mode must be pair or row");
      }
    } else if (key == "meta") {
      if (tok.size() < 3) throw ParseError(lineno, "meta takes key and value");
      std::string value = tok[2];
      for (std::size_t i = 3; i < tok.size(); ++i) value += " " + tok[i];
      meta[tok[1]] = value;
    } else {
      throw ParseError(lineno, "unknown directive: " + key);
    }
  }

  if (dim == 0) throw ParseError(lineno, "missing dim");
  if (basis.empty()) throw ParseError(lineno, "missing basis");
  if (!metric_done) throw ParseError(lineno, "incomplete metric");
  if (j_pairs_seen != dim / 2 && j_rows_seen != dim)
    throw ParseError(lineno, "incomplete J");

  try {
    HermitianModel model(
        LieAlgebraModel(FrameSpace(dim, metric), std::move(structure)),
        ComplexOperator(std::move(j)));
    const ValidationReport v = validate_model(model);
    if (!v.usable()) {
      std::string bad;
      for (const ValidationCheck& c : v.checks)
        if (!c.passed) bad += (bad.empty() ? "" : ", ") + c.name;
      throw ParseError(lineno, "model validation failed: " + bad);
    }
    return ModelDocument{std::move(model), std::move(basis), std::move(meta)};
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(lineno, e.what());
  }
}

ModelDocument parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str());
}

std::string serialize_model(const ModelDocument& doc) {
  const HermitianModel& m = doc.model;
  const int dim = m.dim();
  std::ostringstream out;
  out << "dim " << dim << "\n";
  out << "basis";
  for (int i = 0; i < dim; ++i)
    out << " "
        << (int(doc.basis_names.size()) == dim ? doc.basis_names[std::size_t(i)]
                                               : "e" + std::to_string(i + 1));
  out << "\n";

  const auto& structure = m.algebra().structure();
  for (int i = 0; i < dim; ++i)
    for (int jj = i + 1; jj < dim; ++jj)
      for (int k = 0; k < dim; ++k) {
        const double c = structure[std::size_t(k)](i, jj);
        if (c != 0.0)
          out << "bracket " << i + 1 << " " << jj + 1 << " " << k + 1 << " "
              << format_scalar(c) << "\n";
      }

  const Eigen::MatrixXd& g = m.space().metric();
  if (g.isDiagonal(0.0)) {
    out << "metric diag";
    for (int i = 0; i < dim; ++i) out << " " << format_scalar(g(i, i));
    out << "\n";
  } else {
    for (int r = 0; r < dim; ++r) {
      out << "metric row";
      for (int i = 0; i < dim; ++i) out << " " << format_scalar(g(r, i));
      out << "\n";
    }
  }

  // Emit pair form when J is a signed permutation pairing; rows otherwise.
  const Eigen::MatrixXd& j = m.j().matrix;
  bool pairs_ok = true;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(std::size_t(dim), false);
  for (int a = 0; a < dim && pairs_ok; ++a) {
    if (used[std::size_t(a)]) continue;
    int b = -1;
    for (int r = 0; r < dim; ++r) {
      if (j(r, a) == 0.0) continue;
      if (j(r, a) == 1.0 && b == -1 && !used[std::size_t(r)])
        b = r;
      else
        pairs_ok = false;
    }
    pairs_ok = pairs_ok && b != -1 && j(a, b) == -1.0;
    if (pairs_ok) {
      used[std::size_t(a)] = used[std::size_t(b)] = true;
      pairs.emplace_back(a, b);
    }
  }
  if (pairs_ok && int(pairs.size()) == dim / 2) {
    for (const auto& [a, b] : pairs)
      out << "J pair " << a + 1 << " " << b + 1 << "\n";
  } else {
    for (int r = 0; r < dim; ++r) {
      out << "J row";
      for (int i = 0; i < dim; ++i) out << " " << format_scalar(j(r, i));
      out << "\n";
    }
  }

  for (const auto& [key, value] : doc.meta)
    out << "meta " << key << " " << value << "\n";
  return out.str();
}

}  // namespace skt
