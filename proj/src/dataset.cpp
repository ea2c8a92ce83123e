#include "effortfit/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace effortfit {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_number(const std::string& cell, const std::string& what, int row) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != cell.size() || cell.empty())
    throw std::runtime_error("row " + std::to_string(row) + ": non-numeric " +
                             what + " value '" + cell + "'");
  return v;
}

} // namespace

Dataset parse_csv(const std::string& text, const std::string& name) {
  std::stringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(name + ": empty file");

  // header: id,kloc,me,effort in any order, case-insensitive
  auto header = split_row(line);
  int col[4] = {-1, -1, -1, -1};
  const char* names[4] = {"id", "kloc", "me", "effort"};
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string h = to_lower(header[i]);
    for (int k = 0; k < 4; ++k) {
      if (h == names[k]) {
        if (col[k] >= 0)
          throw std::runtime_error(name + ": duplicate column '" + h + "'");
        col[k] = static_cast<int>(i);
      }
    }
  }
  for (int k = 0; k < 4; ++k)
    if (col[k] < 0)
      throw std::runtime_error(name + ": missing column '" +
                               std::string(names[k]) + "'");

  Dataset d;
  d.name = name;
  std::unordered_set<int> seen_ids;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto cells = split_row(line);
    if (cells.size() != header.size())
      throw std::runtime_error("row " + std::to_string(row) + ": expected " +
                               std::to_string(header.size()) + " cells, got " +
                               std::to_string(cells.size()));
    ProjectRecord r;
    double id = parse_number(cells[col[0]], "id", row);
    r.id = static_cast<int>(id);
    if (r.id != id || r.id <= 0)
      throw std::runtime_error("row " + std::to_string(row) +
                               ": id must be a positive integer");
    r.kloc = parse_number(cells[col[1]], "kloc", row);
    r.me = parse_number(cells[col[2]], "me", row);
    r.effort = parse_number(cells[col[3]], "effort", row);
    if (r.kloc <= 0)
      throw std::runtime_error("row " + std::to_string(row) + ": kloc must be > 0");
    if (r.effort <= 0)
      throw std::runtime_error("row " + std::to_string(row) +
                               ": effort must be > 0");
    if (!seen_ids.insert(r.id).second)
      throw std::runtime_error("row " + std::to_string(row) + ": duplicate id " +
                               std::to_string(r.id));
    d.records.push_back(r);
  }
  if (d.records.empty())
    throw std::runtime_error(name + ": no data rows");
  return d;
}

Dataset load_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error(path + ": cannot open file");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_csv(buf.str(), path);
}

std::string write_csv(const Dataset& d) {
  std::ostringstream out;
  out.precision(17);
  out << "id,kloc,me,effort\n";
  for (const auto& r : d.records)
    out << r.id << ',' << r.kloc << ',' << r.me << ',' << r.effort << '\n';
  return out.str();
}

Dataset nasa_dataset() {
  static const double table[18][3] = {
      // kloc, me, effort
      {90.2, 30, 115.8}, {46.2, 20, 96},   {46.5, 19, 79},
      {54.5, 20, 90.8},  {31.1, 35, 39.6}, {67.5, 29, 98.4},
      {12.8, 26, 18.9},  {10.5, 34, 10.3}, {21.5, 31, 28.5},
      {3.1, 26, 7},      {4.2, 19, 9},     {7.8, 31, 7.3},
      {2.1, 28, 5},      {5, 29, 8.4},     {78.6, 35, 98.7},
      {9.7, 27, 15.6},   {12.5, 27, 23.9}, {100.8, 34, 138.3}};
  Dataset d;
  d.name = "nasa18";
  d.records.reserve(18);
  for (int i = 0; i < 18; ++i)
    d.records.push_back({i + 1, table[i][0], table[i][1], table[i][2]});
  return d;
}

SplitDataset split_fixed(const Dataset& d, std::size_t train_count) {
  if (train_count == 0 || train_count >= d.records.size())
    throw std::invalid_argument(
        "train_count must be in (0, " + std::to_string(d.records.size()) +
        "), got " + std::to_string(train_count));
  SplitDataset s;
  s.train.name = d.name + "/train";
  s.test.name = d.name + "/test";
  s.train.records.assign(d.records.begin(), d.records.begin() + train_count);
  s.test.records.assign(d.records.begin() + train_count, d.records.end());
  return s;
}

} // namespace effortfit
