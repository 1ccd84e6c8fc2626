#include "bandharvest/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace bandharvest::sweep {

void SweepGrid::validate() const {
  if (points < 2) throw std::invalid_argument("SweepGrid: points must be >= 2");
  if (!(start < stop))
    throw std::invalid_argument("SweepGrid: start must be < stop");
  if (scale == Scale::Log && !(start > 0.0))
    throw std::invalid_argument("SweepGrid: log scale requires start > 0");
}

std::vector<double> SweepGrid::values() const {
  validate();
  std::vector<double> v(points);
  if (scale == Scale::Linear) {
    const double h = (stop - start) / (points - 1);
    for (int i = 0; i < points; ++i) v[i] = start + i * h;
  } else {
    const double la = std::log(start);
    const double h = (std::log(stop) - la) / (points - 1);
    for (int i = 0; i < points; ++i) v[i] = std::exp(la + i * h);
  }
  v.back() = stop;
  return v;
}

namespace {

std::string format_value(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream ss;
  ss.precision(17);
  ss << x;
  return ss.str();
}

} // namespace

void write_csv(std::ostream &os, const SweepResult &r) {
  for (const auto &[k, v] : r.metadata) os << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i)
    os << (i ? "," : "") << r.columns[i];
  os << "\n";
  for (const auto &row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_value(row[i]);
    os << "\n";
  }
}

void write_structured(std::ostream &os, const SweepResult &r) {
  nlohmann::json j;
  j["metadata"] = r.metadata;
  j["columns"] = r.columns;
  j["rows"] = nlohmann::json::array();
  for (const auto &row : r.rows) {
    nlohmann::json jr = nlohmann::json::array();
    for (double x : row) {
      if (std::isinf(x))
        jr.push_back(x > 0 ? "inf" : "-inf");
      else
        jr.push_back(x);
    }
    j["rows"].push_back(std::move(jr));
  }
  os << j.dump(2) << "\n";
}

SweepResult read_csv(std::istream &is) {
  SweepResult r;
  std::string line;
  bool header_done = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body[0] == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq != std::string::npos)
        r.metadata[body.substr(0, eq)] = body.substr(eq + 1);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_done) {
      r.columns = cells;
      header_done = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto &c : cells) {
      if (c == "inf")
        row.push_back(std::numeric_limits<double>::infinity());
      else if (c == "-inf")
        row.push_back(-std::numeric_limits<double>::infinity());
      else
        row.push_back(std::stod(c));
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::vector<std::vector<double>>
parallel_map(std::size_t n,
             const std::function<std::vector<double>(std::size_t)> &fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char *env = std::getenv("BANDHARVEST_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) workers = static_cast<unsigned>(cap);
  }
  if (workers > n) workers = static_cast<unsigned>(n ? n : 1);

  std::vector<std::vector<double>> out(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lk(err_mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto &t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

} // namespace bandharvest::sweep
