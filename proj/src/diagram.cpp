#include "pcb/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pcb {

PersistenceDiagram from_birth_death(std::span<const BirthDeath> pairs,
                                    int homology_dim) {
  PersistenceDiagram out;
  out.homology_dim = homology_dim;
  out.points.reserve(pairs.size());
  for (const auto& [birth, death] : pairs) {
    if (std::isnan(birth) || std::isnan(death) || std::isinf(birth)) {
      throw std::invalid_argument("persistence pair has a non-finite birth");
    }
    if (std::isinf(death)) continue;  // essential class, ignored
    if (death < birth) {
      throw std::invalid_argument("malformed diagram: death < birth");
    }
    out.points.push_back({birth, death - birth});
  }
  return out;
}

ConsolidatedDiagram consolidate(std::span<const PersistenceDiagram> diagrams) {
  ConsolidatedDiagram out;
  out.source_count = diagrams.size();
  std::size_t total = 0;
  for (const auto& d : diagrams) total += d.points.size();
  out.points.reserve(total);
  for (const auto& d : diagrams) {
    if (d.homology_dim != diagrams.front().homology_dim) {
      throw std::invalid_argument(
          "consolidate: diagrams have mixed homology dimensions");
    }
    out.points.insert(out.points.end(), d.points.begin(), d.points.end());
  }
  return out;
}

namespace {

bool parse_double_token(const std::string& token, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(token, &used);
    return used == token.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

PersistenceDiagram read_pd_file(const std::filesystem::path& path,
                                int homology_dim) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open PD file: " + path.string());
  }
  std::vector<BirthDeath> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string birth_tok, death_tok, extra;
    if (!(ls >> birth_tok)) continue;  // blank line
    if (birth_tok.front() == '#') continue;
    if (!(ls >> death_tok) || (ls >> extra)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected exactly two values per line");
    }
    double birth = 0.0, death = 0.0;
    if (!parse_double_token(birth_tok, birth) ||
        !parse_double_token(death_tok, death)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": cannot parse number");
    }
    if (death < birth) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": death < birth");
    }
    pairs.emplace_back(birth, death);
  }
  return from_birth_death(pairs, homology_dim);
}

void write_pd_file(const PersistenceDiagram& diagram,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open PD file for writing: " +
                             path.string());
  }
  char buf[80];
  for (const auto& p : diagram.points) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", p.birth,
                  p.birth + p.persistence);
    out << buf;
  }
  if (!out) {
    throw std::runtime_error("error while writing PD file: " + path.string());
  }
}

bool multiset_equal(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  if (a.homology_dim != b.homology_dim) return false;
  if (a.points.size() != b.points.size()) return false;
  auto key = [](const PersistencePoint& p) {
    return std::pair(p.birth, p.persistence);
  };
  auto sa = a.points;
  auto sb = b.points;
  auto cmp = [&](const PersistencePoint& x, const PersistencePoint& y) {
    return key(x) < key(y);
  };
  std::sort(sa.begin(), sa.end(), cmp);
  std::sort(sb.begin(), sb.end(), cmp);
  return sa == sb;
}

}  // namespace pcb
