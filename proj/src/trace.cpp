#include "stlctl/trace.hpp"

#include <fstream>
#include <sstream>

namespace stlctl {

Trace concat(const Trace& history, const Trace& tail) {
  if (history.start_index != 0) {
    throw std::invalid_argument("history must start at time 0, starts at " +
                                std::to_string(history.start_index));
  }
  if (tail.start_index != history.size()) {
    throw std::invalid_argument("history ends at time " + std::to_string(history.size() - 1) +
                                " but tail starts at " + std::to_string(tail.start_index));
  }
  Trace out;
  out.start_index = 0;
  out.states.reserve(history.states.size() + tail.states.size());
  out.states.insert(out.states.end(), history.states.begin(), history.states.end());
  out.states.insert(out.states.end(), tail.states.begin(), tail.states.end());
  return out;
}

Trace read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open trace file: " + path);
  }
  Trace tr;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (first && line.find('x') != std::string::npos) {
      first = false;  // header row `x0,x1,...`
      continue;
    }
    first = false;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      row.push_back(std::stod(cell));
    }
    Vec v(static_cast<int>(row.size()));
    for (size_t i = 0; i < row.size(); ++i) v[static_cast<int>(i)] = row[i];
    if (!tr.states.empty() && v.size() != tr.states.front().size()) {
      throw std::runtime_error("inconsistent column count in trace file: " + path);
    }
    tr.states.push_back(std::move(v));
  }
  if (tr.states.empty()) {
    throw std::runtime_error("trace file has no samples: " + path);
  }
  return tr;
}

}  // namespace stlctl
