#include "llt/paths.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "llt/errors.hpp"

namespace llt {

SchroderPath::SchroderPath(std::string steps) : steps_(std::move(steps)) {
  int x = 0, y = 0;
  for (char& c : steps_) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    switch (c) {
      case 'N': ++y; break;
      case 'E': ++x; break;
      case 'D':
        if (x == y) throw ParseError("diagonal step on the main diagonal in path " + steps_);
        ++x;
        ++y;
        break;
      default: throw ParseError(std::string("invalid step '") + c + "' in path");
    }
    if (y < x) throw ParseError("path falls below the diagonal: " + steps_);
  }
  if (x != y) throw ParseError("path does not end on the diagonal: " + steps_);
  n_ = x;
}

SchroderPath SchroderPath::full(int n) { return SchroderPath(std::string(static_cast<size_t>(n), 'N') + std::string(static_cast<size_t>(n), 'E')); }

SchroderPath SchroderPath::staircase(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += "NE";
  return SchroderPath(s);
}

std::string SchroderPath::word() const {
  std::string w = steps_;
  for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return w;
}

std::vector<std::pair<int, int>> SchroderPath::points() const {
  std::vector<std::pair<int, int>> pts{{0, 0}};
  int x = 0, y = 0;
  for (char c : steps_) {
    if (c != 'E') ++y;
    if (c != 'N') ++x;
    pts.emplace_back(x, y);
  }
  return pts;
}

int SchroderPath::exit_step(int column) const {
  int x = 0;
  for (size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k] != 'N') {
      if (x == column - 1) return static_cast<int>(k);
      ++x;
    }
  }
  throw Error("column out of range");
}

std::vector<int> SchroderPath::heights() const {
  std::vector<int> h(static_cast<size_t>(n_) + 1, 0);
  int x = 0, y = 0;
  for (char c : steps_) {
    if (c != 'N') h[static_cast<size_t>(x) + 1] = y;
    if (c != 'E') ++y;
    if (c != 'N') ++x;
  }
  return h;
}

std::vector<int> SchroderPath::jumps() const {
  auto h = heights();
  std::vector<int> j(static_cast<size_t>(std::max(n_, 1)), 0);
  for (int i = 1; i < n_; ++i) j[static_cast<size_t>(i)] = h[static_cast<size_t>(i) + 1] - h[static_cast<size_t>(i)];
  return j;
}

std::vector<int> SchroderPath::diagonal_columns() const {
  std::vector<int> cols;
  for (auto [i, j] : diagonal_boxes()) cols.push_back(i);
  return cols;
}

std::vector<Box> SchroderPath::diagonal_boxes() const {
  std::vector<Box> out;
  int x = 0, y = 0;
  for (char c : steps_) {
    if (c == 'D') out.emplace_back(x + 1, y + 1);
    if (c != 'E') ++y;
    if (c != 'N') ++x;
  }
  return out;
}

bool SchroderPath::is_under(int i, int j) const {
  if (i >= j || i < 1 || j > n_) return false;
  // Some path point (x, y) with x <= i-1 and y >= j; the column height is
  // the largest y reached before leaving column i.
  return heights()[static_cast<size_t>(i)] >= j;
}

std::vector<Box> SchroderPath::boxes_under() const {
  auto h = heights();
  std::vector<Box> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= h[static_cast<size_t>(i)]; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Box> SchroderPath::outer_corners() const {
  std::vector<Box> out;
  auto pts = points();
  for (size_t k = 0; k + 1 < steps_.size(); ++k) {
    if (steps_[k] == 'E' && steps_[k + 1] == 'N') out.emplace_back(pts[k].first + 1, pts[k].second + 1);
  }
  return out;
}

std::vector<SchroderPath> SchroderPath::components() const {
  std::vector<SchroderPath> out;
  auto pts = points();
  size_t start = 0;
  for (size_t k = 1; k < pts.size(); ++k) {
    if (pts[k].first == pts[k].second) {
      out.emplace_back(steps_.substr(start, k - start));
      start = k;
    }
  }
  return out;
}

bool SchroderPath::is_connected() const { return components().size() <= 1; }

bool SchroderPath::is_reduced() const {
  if (!is_connected()) return false;
  if (steps_ == "NE") return true;
  if (steps_.size() < 2 || steps_[0] != 'N' || steps_[1] != 'D') return false;
  return outer_corners().empty();
}

SchroderPath concat(const std::vector<SchroderPath>& parts) {
  std::string s;
  for (const auto& p : parts) s += p.steps();
  return SchroderPath(s);
}

std::vector<SchroderPath> all_schroder_paths(int n) {
  std::vector<SchroderPath> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int x, int y) {
    if (x == n && y == n) {
      out.emplace_back(cur);
      return;
    }
    if (y < n) {
      cur.push_back('N');
      rec(x, y + 1);
      cur.pop_back();
    }
    if (x < y) {
      cur.push_back('E');
      rec(x + 1, y);
      cur.pop_back();
    }
    if (x < y && y < n) {
      cur.push_back('D');
      rec(x + 1, y + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<SchroderPath> all_dyck_paths(int n) {
  auto all = all_schroder_paths(n);
  std::erase_if(all, [](const SchroderPath& p) { return !p.is_dyck(); });
  return all;
}

}  // namespace llt
