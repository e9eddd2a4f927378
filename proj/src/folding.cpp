#include "renner/folding.hpp"

#include <algorithm>

#include "renner/error.hpp"
#include "renner/symplectic.hpp"

namespace renner {

PartialMatrix::PartialMatrix(int rows, int cols, std::set<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows < 1 || cols < 1) throw InvalidArgument("matrix dimensions must be positive");
  std::set<int> seen_rows, seen_cols;
  for (auto [r, c] : cells_) {
    if (r < 1 || r > rows || c < 1 || c > cols)
      throw InvalidArgument("cell out of bounds");
    if (!seen_rows.insert(r).second) throw InvalidArgument("two cells in row " + std::to_string(r));
    if (!seen_cols.insert(c).second)
      throw InvalidArgument("two cells in column " + std::to_string(c));
  }
}

PartialMatrix PartialMatrix::from_rook(const Rook& x) {
  std::set<Cell> cells;
  for (int j = 1; j <= x.size(); ++j)
    if (x.at(j) != 0) cells.emplace(x.at(j), j);
  return PartialMatrix(x.size(), x.size(), std::move(cells));
}

Rook PartialMatrix::to_rook() const {
  if (rows_ != cols_) throw InvalidArgument("not a square matrix");
  std::vector<int> v(static_cast<std::size_t>(cols_), 0);
  for (auto [r, c] : cells_) v[static_cast<std::size_t>(c - 1)] = r;
  return Rook(std::move(v));
}

std::string PartialMatrix::to_string() const {
  std::string s = std::to_string(rows_) + " " + std::to_string(cols_) + ";";
  for (auto [r, c] : cells_) s += " " + std::to_string(r) + "," + std::to_string(c);
  return s;
}

namespace {

int reflect(int index, int half) { return index > half ? index - half : half + 1 - index; }

PartialMatrix fold_rows(const PartialMatrix& m) {
  if (m.rows() % 2 != 0) throw InvalidArgument("top-to-bottom fold needs an even row count");
  const int h = m.rows() / 2;
  std::set<PartialMatrix::Cell> out;
  std::set<int> used;
  for (auto [r, c] : m.cells()) {
    const int folded = reflect(r, h);
    if (!used.insert(folded).second)
      throw InvalidArgument("rows " + std::to_string(folded) + " and " +
                            std::to_string(m.rows() + 1 - folded) +
                            " collide under top-to-bottom folding");
    out.emplace(folded, c);
  }
  return PartialMatrix(h, m.cols(), std::move(out));
}

PartialMatrix fold_cols(const PartialMatrix& m) {
  if (m.cols() % 2 != 0) throw InvalidArgument("left-to-right fold needs an even column count");
  const int w = m.cols() / 2;
  std::set<PartialMatrix::Cell> out;
  std::set<int> used;
  for (auto [r, c] : m.cells()) {
    const int folded = reflect(c, w);
    if (!used.insert(folded).second)
      throw InvalidArgument("columns " + std::to_string(folded) + " and " +
                            std::to_string(m.cols() + 1 - folded) +
                            " collide under left-to-right folding");
    out.emplace(r, folded);
  }
  return PartialMatrix(m.rows(), w, std::move(out));
}

}  // namespace

PartialMatrix fold(const PartialMatrix& m, FoldDirection direction) {
  switch (direction) {
    case FoldDirection::top_to_bottom: return fold_rows(m);
    case FoldDirection::left_to_right: return fold_cols(m);
    case FoldDirection::both: return fold_cols(fold_rows(m));
  }
  throw InvalidArgument("unknown fold direction");
}

Rook fold(const Rook& x) {
  return fold(PartialMatrix::from_rook(x), FoldDirection::both).to_rook();
}

std::vector<Rook> unfold_preimages(const Rook& a) {
  const int l = a.size();
  std::vector<Rook> out;
  for (const auto& x : enum_family({2 * l, Family::borel_sp, a.rank()}))
    if (fold(x) == a) out.push_back(x);
  return out;
}

std::vector<Rook> unfold_constructive(const Rook& a) {
  const int l = a.size();
  const int n = 2 * l;
  // Per nonzero cell of a, the admissible (row, col) lifts on or above the
  // diagonal.
  std::vector<std::vector<PartialMatrix::Cell>> options;
  for (int j = 1; j <= l; ++j) {
    const int i = a.at(j);
    if (i == 0) continue;
    std::vector<PartialMatrix::Cell> lifts;
    for (int r : {l + 1 - i, l + i})
      for (int c : {l + 1 - j, l + j})
        if (r <= c) lifts.emplace_back(r, c);
    options.push_back(std::move(lifts));
  }
  std::vector<Rook> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  // Odometer over the option lists.
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::fill(current.begin(), current.end(), 0);
    for (std::size_t t = 0; t < options.size(); ++t) {
      auto [r, c] = options[t][pick[t]];
      current[static_cast<std::size_t>(c - 1)] = r;
    }
    out.emplace_back(current);
    std::size_t t = 0;
    while (t < options.size() && ++pick[t] == options[t].size()) pick[t++] = 0;
    if (t == options.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt preimage_count(const Rook& a) { return preimage_weight(a); }

}  // namespace renner
