#include "semicurve/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semicurve {

std::vector<Step> dyck_path(const CofiniteSet& t) {
  const int length = std::max(2 * t.genus(), t.conductor());
  std::vector<Step> path;
  path.reserve(static_cast<std::size_t>(length));
  for (int i = 1; i <= length; ++i) path.push_back(t.contains(i) ? Step::Right : Step::Up);
  return path;
}

YoungDiagram::YoungDiagram(std::vector<int> rows, int grid_rows, int grid_cols)
    : rows_(std::move(rows)), grid_rows_(grid_rows), grid_cols_(grid_cols) {
  if (!std::is_sorted(rows_.begin(), rows_.end(), std::greater<>())) {
    throw std::invalid_argument("row lengths must be weakly decreasing");
  }
  if (static_cast<int>(rows_.size()) > grid_rows_ ||
      (!rows_.empty() && (rows_.front() > grid_cols_ || rows_.back() < 0))) {
    throw std::invalid_argument("rows do not fit the grid");
  }
}

int YoungDiagram::boxes() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::vector<int> YoungDiagram::partition() const {
  std::vector<int> p;
  for (int r : rows_) {
    if (r > 0) p.push_back(r);
  }
  return p;
}

std::vector<int> YoungDiagram::transpose() const {
  std::vector<int> cols;
  const int width = rows_.empty() ? 0 : rows_.front();
  for (int j = 0; j < width; ++j) {
    cols.push_back(static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [j](int r) { return r > j; })));
  }
  return cols;
}

YoungDiagram diagram(const CofiniteSet& t) {
  const std::vector<Step> path = dyck_path(t);
  std::vector<int> rows;
  int rights = 0;
  for (Step s : path) {
    if (s == Step::Right) {
      ++rights;
    } else {
      rows.push_back(rights);
    }
  }
  std::reverse(rows.begin(), rows.end());
  return YoungDiagram(std::move(rows), t.genus(), rights);
}

int weight_via_diagram(const CofiniteSet& t) { return diagram(t).boxes(); }

YoungDiagram t1_subdiagram(const CofiniteSet& s) {
  if (s.genus() < 1) throw std::domain_error("t1 subdiagram needs genus >= 1");
  const YoungDiagram d = diagram(s);
  std::vector<int> rows(d.rows().begin() + 1, d.rows().end());
  return YoungDiagram(std::move(rows), d.grid_rows() - 1, d.grid_cols());
}

bool verify_transpose(const NumericalSemigroup& s) {
  if (s.genus() == 0) return true;
  return t1_subdiagram(k_set(s)).partition() == t1_subdiagram(s).transpose();
}

std::pair<int, int> top_row_lengths(const NumericalSemigroup& s) {
  if (s.genus() < 1) throw std::domain_error("top rows need genus >= 1");
  const int g = s.genus();
  const int c = s.conductor();
  const std::pair<int, int> expected{c - 1 - g, g - 1};
  const std::pair<int, int> computed{diagram(s).rows().front(), diagram(k_set(s)).rows().front()};
  if (computed != expected) throw std::logic_error("diagram top rows disagree with c-1-g, g-1");
  return expected;
}

std::string render_text(const YoungDiagram& d) {
  std::string out;
  for (int i = 0; i < d.grid_rows(); ++i) {
    const int len = i < static_cast<int>(d.rows().size()) ? d.rows()[static_cast<std::size_t>(i)] : 0;
    for (int j = 0; j < d.grid_cols(); ++j) {
      out += j < len ? (i == 0 ? '#' : '*') : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace semicurve
