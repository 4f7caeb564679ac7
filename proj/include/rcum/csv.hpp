#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rcum/path.hpp"

namespace rcum {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

using NamedPath = std::pair<std::string, MultiPath>;

// Long-format path CSV with mandatory header "path_id,t,x1,...,xk". Within
// one path_id times must be strictly increasing and every row carries the
// header arity. Ingested paths have no jump information.
std::vector<NamedPath> ingest_paths(std::istream& in);
std::vector<NamedPath> ingest_paths_file(const std::string& filename);

// All paths must share one component arity.
void export_paths(std::ostream& out, std::span<const NamedPath> paths);
void export_paths_file(const std::string& filename,
                       std::span<const NamedPath> paths);

}  // namespace rcum
