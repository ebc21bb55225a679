#include "su2para/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace su2para {

namespace {

using nlohmann::json;

json complex_matrix_to_json(const MatrixXcd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixXcd complex_matrix_from_json(const json& rows) {
  const int nr = int(rows.size());
  const int nc = nr > 0 ? int(rows[0].size()) : 0;
  MatrixXcd m(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      m(r, c) = cplx(rows[r][c][0].get<double>(), rows[r][c][1].get<double>());
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(bool(in), "cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(bool(out), "cannot open file for writing: " + tmp);
    out << content;
    require(bool(out), "write failed: " + tmp);
  }
  require(std::rename(tmp.c_str(), path.c_str()) == 0,
          "rename failed: " + path);
}

std::string spectral_to_json(const SpectralFunction& f) {
  json j;
  j["kind"] = "spectral_function";
  j["two_band"] = f.two_band;
  json blocks = json::array();
  for (int two_j = 0; two_j <= f.two_band; ++two_j)
    blocks.push_back(complex_matrix_to_json(f.block(two_j)));
  j["blocks"] = std::move(blocks);
  return j.dump(2) + "\n";
}

SpectralFunction spectral_from_json(const std::string& text) {
  const json j = json::parse(text);
  require(j.at("kind") == "spectral_function", "not a spectral function file");
  SpectralFunction f = SpectralFunction::zero(j.at("two_band").get<int>());
  const auto& blocks = j.at("blocks");
  require(int(blocks.size()) == f.two_band + 1, "block count mismatch");
  for (int two_j = 0; two_j <= f.two_band; ++two_j) {
    MatrixXcd m = complex_matrix_from_json(blocks[two_j]);
    require(m.rows() == dim_of(two_j) && m.cols() == dim_of(two_j),
            "block dimension mismatch");
    f.block(two_j) = std::move(m);
  }
  return f;
}

void save_spectral(const std::string& path, const SpectralFunction& f) {
  atomic_write_text(path, spectral_to_json(f));
}

SpectralFunction load_spectral(const std::string& path) {
  return spectral_from_json(read_file(path));
}

std::string symbol_to_json(const Symbol& a) {
  json j;
  j["kind"] = "symbol";
  j["two_xi_band"] = a.xi_band();
  j["two_x_band"] = a.x_band();
  json degrees = json::array();
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j) {
    json per_eta = json::array();
    for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
      json slices = json::array();
      for (const auto& m : a.tensor(two_j, two_eta))
        slices.push_back(complex_matrix_to_json(m));
      per_eta.push_back(std::move(slices));
    }
    degrees.push_back(std::move(per_eta));
  }
  j["data"] = std::move(degrees);
  return j.dump() + "\n";
}

Symbol symbol_from_json(const std::string& text) {
  const json j = json::parse(text);
  require(j.at("kind") == "symbol", "not a symbol file");
  Symbol a(j.at("two_xi_band").get<int>(), j.at("two_x_band").get<int>());
  const auto& data = j.at("data");
  for (int two_j = 0; two_j <= a.xi_band(); ++two_j)
    for (int two_eta = 0; two_eta <= a.x_band(); ++two_eta) {
      const auto& slices = data[two_j][two_eta];
      auto& t = a.tensor(two_j, two_eta);
      require(slices.size() == t.size(), "symbol slice count mismatch");
      for (size_t k = 0; k < t.size(); ++k)
        t[k] = complex_matrix_from_json(slices[k]);
    }
  return a;
}

void save_symbol(const std::string& path, const Symbol& a) {
  atomic_write_text(path, symbol_to_json(a));
}

Symbol load_symbol(const std::string& path) {
  return symbol_from_json(read_file(path));
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace su2para
