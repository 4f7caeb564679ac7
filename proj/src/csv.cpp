#include "rcum/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "rcum/errors.hpp"

namespace rcum {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_field(const std::string& field, std::size_t row,
                   const char* what) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ParseError("csv row " + std::to_string(row) + ": bad " + what +
                     " value '" + field + "'");
  }
  return v;
}

}  // namespace

std::vector<NamedPath> ingest_paths(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("csv: missing header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split_row(line);
  if (header.size() < 3 || header[0] != "path_id" || header[1] != "t") {
    throw ParseError("csv: header must be path_id,t,x1,...,xk");
  }
  const std::size_t arity = header.size() - 2;

  std::vector<NamedPath> paths;
  std::unordered_map<std::string, std::size_t> index;  // id -> paths position
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_row(line);
    if (fields.size() != header.size()) {
      throw ParseError("csv row " + std::to_string(row) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    const std::string& id = fields[0];
    const double t = parse_field(fields[1], row, "time");

    auto found = index.find(id);
    if (found == index.end()) {
      MultiPath fresh;
      fresh.components.assign(arity, {});
      found = index.emplace(id, paths.size()).first;
      paths.emplace_back(id, std::move(fresh));
    }
    MultiPath& path = paths[found->second].second;
    if (!path.grid.empty() && !(t > path.grid.back())) {
      throw ParseError("csv row " + std::to_string(row) + ": path '" + id +
                       "' times not strictly increasing");
    }
    path.grid.push_back(t);
    for (std::size_t c = 0; c < arity; ++c) {
      path.components[c].push_back(
          parse_field(fields[c + 2], row, "component"));
    }
  }
  for (auto& p : paths) p.second.validate();
  return paths;
}

std::vector<NamedPath> ingest_paths_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError("cannot open csv file: " + filename);
  return ingest_paths(in);
}

void export_paths(std::ostream& out, std::span<const NamedPath> paths) {
  if (paths.empty()) throw std::invalid_argument("export_paths: nothing to write");
  const int arity = paths.front().second.order();
  for (const NamedPath& p : paths) {
    if (p.second.order() != arity) {
      throw std::invalid_argument("export_paths: mixed component arity");
    }
  }
  out << "path_id,t";
  for (int c = 1; c <= arity; ++c) out << ",x" << c;
  out << '\n';
  for (const NamedPath& p : paths) {
    const MultiPath& path = p.second;
    for (std::size_t j = 0; j < path.points(); ++j) {
      out << p.first << ',' << format_double(path.grid[j]);
      for (int c = 0; c < arity; ++c) {
        out << ',' << format_double(path.components[c][j]);
      }
      out << '\n';
    }
  }
}

void export_paths_file(const std::string& filename,
                       std::span<const NamedPath> paths) {
  std::ofstream out(filename);
  if (!out) throw std::invalid_argument("cannot open output file: " + filename);
  export_paths(out, paths);
}

}  // namespace rcum
