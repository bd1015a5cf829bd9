#include "jsmap/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace jsmap {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  return cells;
}

double parse_number(const std::string& cell, int row, int col) {
  try {
    std::size_t pos = 0;
    const double value = std::stod(cell, &pos);
    if (pos != cell.size()) throw std::invalid_argument(cell);
    return value;
  } catch (const std::exception&) {
    throw ParseError("malformed numeric cell '" + cell + "'", row, col);
  }
}

long parse_index(const std::string& cell, int row, int col) {
  try {
    std::size_t pos = 0;
    const long value = std::stol(cell, &pos);
    if (pos != cell.size()) throw std::invalid_argument(cell);
    return value;
  } catch (const std::exception&) {
    throw ParseError("malformed index cell '" + cell + "'", row, col);
  }
}

/// Cells like "1.5+0.5j", "2-1j", "3", "-1j".
Complex parse_complex_cell(std::string cell, int row, int col) {
  cell = trim(cell);
  if (cell.empty()) throw ParseError("empty cell", row, col);
  if (cell.back() != 'j') return {parse_number(cell, row, col), 0.0};
  cell.pop_back();
  // split at the last +/- that is not part of an exponent and not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = cell.size(); i-- > 1;) {
    if ((cell[i] == '+' || cell[i] == '-') &&
        cell[i - 1] != 'e' && cell[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {  // pure imaginary
    if (cell.empty() || cell == "+" || cell == "-") cell += "1";
    return {0.0, parse_number(cell, row, col)};
  }
  std::string im = cell.substr(split);
  if (im == "+" || im == "-") im += "1";
  return {parse_number(cell.substr(0, split), row, col),
          parse_number(im, row, col)};
}

Complex json_complex(const json& value) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number())
    return {value[0].get<double>(), value[1].get<double>()};
  throw ParseError("complex JSON entry must be a number or [re, im]", 0, 0);
}

}  // namespace

OperatorMatrix read_matrix_csv(const std::string& path, int size_hint) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file " + path, 0, 0);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool dense = false;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line);
    if (rows.empty() && !cells.empty() &&
        (cells[0] == "m" || cells[0] == "row"))  // optional header
      continue;
    for (const auto& cell : cells)
      if (cell.find('j') != std::string::npos) dense = true;
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw ParseError("empty matrix file " + path, 0, 0);

  if (dense) {
    const int n = static_cast<int>(rows.size());
    CMatrix a = CMatrix::Zero(n, n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n)
        throw ParseError("dense matrix row has wrong length", r + 1,
                         static_cast<int>(rows[r].size()));
      for (int c = 0; c < n; ++c)
        a(r, c) = parse_complex_cell(rows[r][c], r + 1, c + 1);
    }
    return OperatorMatrix::dense(std::move(a));
  }

  // sparse triplets m,n,re[,im]
  long max_index = size_hint;
  struct Triplet {
    long m, n;
    Complex value;
  };
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != 3 && cells.size() != 4)
      throw ParseError("triplet row must have m,n,re[,im]",
                       static_cast<int>(r + 1), static_cast<int>(cells.size()));
    const long m = parse_index(cells[0], static_cast<int>(r + 1), 1);
    const long n = parse_index(cells[1], static_cast<int>(r + 1), 2);
    if (m < 1 || n < 1)
      throw ParseError("matrix indices are 1-based", static_cast<int>(r + 1), 1);
    const double re = parse_number(cells[2], static_cast<int>(r + 1), 3);
    const double im =
        cells.size() == 4 ? parse_number(cells[3], static_cast<int>(r + 1), 4) : 0.0;
    triplets.push_back({m, n, {re, im}});
    max_index = std::max({max_index, m, n});
  }
  CMatrix a = CMatrix::Zero(max_index, max_index);
  for (const auto& t : triplets) a(t.m - 1, t.n - 1) += t.value;
  return OperatorMatrix::dense(std::move(a));
}

OperatorMatrix read_matrix_json(const std::string& path, int size_hint) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file " + path, 0, 0);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), 0, 0);
  }
  const std::string kind = doc.value("kind", "dense");
  if (kind == "diagonal") {
    const auto& values = doc.at("values");
    CVector diag(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) diag(i) = json_complex(values[i]);
    return OperatorMatrix::diagonal(diag);
  }
  if (kind == "toeplitz" || kind == "two_sided_toeplitz") {
    std::map<int, Complex> offsets;
    for (const auto& [key, value] : doc.at("offsets").items())
      offsets[std::stoi(key)] = json_complex(value);
    const int n = doc.value("N", size_hint);
    if (n < 1) throw ParseError("toeplitz matrix needs N", 0, 0);
    return kind == "toeplitz" ? OperatorMatrix::toeplitz(offsets, n)
                              : OperatorMatrix::two_sided_toeplitz(offsets, n);
  }
  if (kind == "jordan") {
    std::vector<Complex> eigs;
    for (const auto& value : doc.at("eigs")) eigs.push_back(json_complex(value));
    std::vector<int> blocks = doc.at("blocks").get<std::vector<int>>();
    return OperatorMatrix::jordan(eigs, blocks);
  }
  if (kind == "dense") {
    const auto& rows = doc.at("rows");
    const int n = static_cast<int>(rows.size());
    CMatrix a(n, n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n)
        throw ParseError("dense JSON row has wrong length", r + 1, 0);
      for (int c = 0; c < n; ++c) a(r, c) = json_complex(rows[r][c]);
    }
    return OperatorMatrix::dense(std::move(a));
  }
  throw ParseError("unknown matrix kind '" + kind + "'", 0, 0);
}

OperatorMatrix load_matrix(const std::string& path, int size_hint) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
    return read_matrix_json(path, size_hint);
  return read_matrix_csv(path, size_hint);
}

HardyElement read_hardy_json(const std::string& path, int fiber_dim) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file " + path, 0, 0);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), 0, 0);
  }
  if (!doc.is_array()) throw ParseError("hardy element must be a JSON array", 0, 0);
  if (fiber_dim < 1 || doc.size() % fiber_dim != 0)
    throw ParseError("hardy array length must be a multiple of the fiber dim", 0, 0);
  const int n = static_cast<int>(doc.size()) / fiber_dim;
  HardyElement f(n, fiber_dim);
  for (int component = 0; component < fiber_dim; ++component)
    for (int mode = 1; mode <= n; ++mode)
      f.table()(component, mode - 1) =
          json_complex(doc[component * n + mode - 1]);
  return f;
}

std::string hardy_to_json(const HardyElement& f) {
  json doc = json::array();
  for (int component = 0; component < f.fiber_dim(); ++component)
    for (int mode = 1; mode <= f.max_degree(); ++mode) {
      const Complex value = f.table()(component, mode - 1);
      doc.push_back({value.real(), value.imag()});
    }
  return doc.dump();
}

void write_hardy_json(const HardyElement& f, const std::string& path) {
  write_text_file(path, hardy_to_json(f) + "\n");
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", value);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace jsmap
