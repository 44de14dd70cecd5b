#include "llt/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "llt/errors.hpp"

namespace llt {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length()) throw Error("inner shape does not fit in outer shape");
  for (int i = 0; i < inner_.length(); ++i) {
    if (inner_.parts()[static_cast<size_t>(i)] > outer_.parts()[static_cast<size_t>(i)]) {
      throw Error("inner shape does not fit in outer shape");
    }
  }
  if (cell_count() == 0) throw Error("skew shape " + to_string() + " has no cells");
}

bool SkewShape::contains(int row, int col) const {
  if (row < 1 || row > outer_.length() || col < 1) return false;
  const int lo = row <= inner_.length() ? inner_.parts()[static_cast<size_t>(row) - 1] : 0;
  return col > lo && col <= outer_.parts()[static_cast<size_t>(row) - 1];
}

std::string SkewShape::to_string() const {
  return inner_.length() == 0 ? outer_.to_string() : outer_.to_string() + "/" + inner_.to_string();
}

ShapeSequence::ShapeSequence(std::vector<SkewShape> shapes) : shapes_(std::move(shapes)) {
  if (shapes_.empty()) throw Error("shape sequence must be nonempty");
  for (int k = 0; k < length(); ++k) {
    const SkewShape& sh = shapes_[static_cast<size_t>(k)];
    std::vector<Cell> mine;
    for (int r = 1; r <= sh.outer().length(); ++r) {
      for (int c = 1; c <= sh.outer().parts()[static_cast<size_t>(r) - 1]; ++c) {
        if (sh.contains(r, c)) mine.push_back(Cell{k + 1, r, c});
      }
    }
    std::sort(mine.begin(), mine.end(), [](const Cell& a, const Cell& b) {
      if (content(a) != content(b)) return content(a) > content(b);
      return a.row < b.row;
    });
    cells_.insert(cells_.end(), mine.begin(), mine.end());
  }
}

namespace {

std::vector<int> parse_parts(const std::string& text, size_t& pos) {
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(' in shape text: " + text);
  ++pos;
  std::vector<int> parts;
  skip();
  while (pos < text.size() && text[pos] != ')') {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw ParseError("expected integer in shape text: " + text);
    }
    parts.push_back(v);
    pos += used;
    skip();
    if (pos < text.size() && text[pos] == ',') ++pos;
    skip();
  }
  if (pos >= text.size()) throw ParseError("unterminated '(' in shape text: " + text);
  ++pos;
  skip();
  return parts;
}

}  // namespace

ShapeSequence ShapeSequence::parse(const std::string& text) {
  std::vector<SkewShape> shapes;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    size_t pos = 0;
    try {
      auto outer = parse_parts(piece, pos);
      std::vector<int> inner;
      if (pos < piece.size() && piece[pos] == '/') {
        ++pos;
        inner = parse_parts(piece, pos);
      }
      if (pos != piece.size()) throw ParseError("trailing characters in shape text: " + piece);
      shapes.emplace_back(Partition(outer), Partition(inner));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    start = end + 1;
  }
  return ShapeSequence(std::move(shapes));
}

ShapeSequence ShapeSequence::unicellular(const std::vector<int>& contents) {
  if (contents.empty()) throw Error("unicellular sequence must be nonempty");
  const int lo = *std::min_element(contents.begin(), contents.end());
  std::vector<SkewShape> shapes;
  for (int c : contents) {
    // A single cell in row 1 at column (c - lo + 1); content shifts
    // uniformly by -lo, which leaves shifted-content differences intact.
    const int col = c - lo + 1;
    shapes.emplace_back(Partition({col}), col > 1 ? Partition({col - 1}) : Partition());
  }
  return ShapeSequence(std::move(shapes));
}

ShapeSequence ShapeSequence::subsequence(const std::vector<int>& positions) const {
  std::vector<SkewShape> sub;
  for (int p : positions) sub.push_back(shapes_.at(static_cast<size_t>(p)));
  return ShapeSequence(std::move(sub));
}

std::string ShapeSequence::to_string() const {
  std::string s;
  for (size_t i = 0; i < shapes_.size(); ++i) {
    if (i) s += ";";
    s += shapes_[i].to_string();
  }
  return s;
}

void enumerate_ssyt(const ShapeSequence& s, int nvars, const std::function<void(const Tableau&)>& visit) {
  const auto& cells = s.cells();
  // Neighbour indices within the same shape: left/right in the row,
  // below/above in the column (row - 1 / row + 1).
  std::map<std::tuple<int, int, int>, int> index;
  for (size_t i = 0; i < cells.size(); ++i) index[{cells[i].seq, cells[i].row, cells[i].col}] = static_cast<int>(i);
  auto find = [&](int k, int r, int c) {
    auto it = index.find({k, r, c});
    return it == index.end() ? -1 : it->second;
  };
  struct Nbrs {
    int left, right, lower_row, upper_row;
  };
  std::vector<Nbrs> nb;
  for (const Cell& c : cells) {
    nb.push_back({find(c.seq, c.row, c.col - 1), find(c.seq, c.row, c.col + 1), find(c.seq, c.row - 1, c.col),
                  find(c.seq, c.row + 1, c.col)});
  }
  Tableau t(cells.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cells.size()) {
      visit(t);
      return;
    }
    int lo = 1, hi = nvars;
    const Nbrs& b = nb[i];
    auto bound = [&](int j) { return j >= 0 && static_cast<size_t>(j) < i ? t[static_cast<size_t>(j)] : 0; };
    if (int v = bound(b.left)) lo = std::max(lo, v);
    if (int v = bound(b.right)) hi = std::min(hi, v);
    if (int v = bound(b.lower_row)) lo = std::max(lo, v + 1);
    if (int v = bound(b.upper_row)) hi = std::min(hi, v - 1);
    for (int v = lo; v <= hi; ++v) {
      t[i] = v;
      rec(i + 1);
    }
    t[i] = 0;
  };
  rec(0);
}

long long count_ssyt(const ShapeSequence& s, int nvars) {
  long long n = 0;
  enumerate_ssyt(s, nvars, [&](const Tableau&) { ++n; });
  return n;
}

int inversions(const Tableau& t, const ShapeSequence& s) {
  const auto& cells = s.cells();
  const int n = s.length();
  int inv = 0;
  for (size_t a = 0; a < cells.size(); ++a) {
    const int ca = shifted_content(cells[a], n);
    for (size_t b = 0; b < cells.size(); ++b) {
      const int d = shifted_content(cells[b], n) - ca;
      if (d > 0 && d < n && t[a] > t[b]) ++inv;
    }
  }
  return inv;
}

XQPoly llt_ssyt(const ShapeSequence& s, int nvars) {
  MonomialCounter acc(nvars);
  Exponent e(static_cast<size_t>(nvars), 0);
  enumerate_ssyt(s, nvars, [&](const Tableau& t) {
    std::fill(e.begin(), e.end(), 0);
    for (int v : t) ++e[static_cast<size_t>(v) - 1];
    acc.add(e, inversions(t, s));
  });
  return acc.to_poly();
}

}  // namespace llt
