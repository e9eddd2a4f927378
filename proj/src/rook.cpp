#include "renner/rook.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "renner/error.hpp"

namespace renner {

Rook::Rook(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  if (n <= 0) throw InvalidArgument("rook size must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line_) {
    if (v < 0 || v > n) {
      throw InvalidArgument("entry " + std::to_string(v) + " out of range 0.." +
                            std::to_string(n));
    }
    if (v != 0) {
      if (seen[static_cast<std::size_t>(v)]) {
        throw InvalidArgument("duplicate nonzero entry " + std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

Rook Rook::zero(int n) { return Rook(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Rook Rook::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) v[static_cast<std::size_t>(j - 1)] = j;
  return Rook(std::move(v));
}

int Rook::rank() const {
  return static_cast<int>(std::count_if(one_line_.begin(), one_line_.end(),
                                        [](int v) { return v != 0; }));
}

std::vector<int> Rook::domain() const {
  std::vector<int> d;
  for (int j = 1; j <= size(); ++j)
    if (at(j) != 0) d.push_back(j);
  return d;
}

std::vector<int> Rook::range() const {
  std::vector<int> r;
  for (int v : one_line_)
    if (v != 0) r.push_back(v);
  std::sort(r.begin(), r.end());
  return r;
}

bool Rook::is_upper_triangular() const {
  for (int j = 1; j <= size(); ++j)
    if (at(j) > j) return false;
  return true;
}

bool Rook::is_strictly_upper_triangular() const {
  for (int j = 1; j <= size(); ++j)
    if (at(j) >= j && at(j) != 0) return false;
  return true;
}

bool Rook::is_diagonal() const {
  for (int j = 1; j <= size(); ++j)
    if (at(j) != 0 && at(j) != j) return false;
  return true;
}

Rook Rook::inverse() const {
  std::vector<int> inv(one_line_.size(), 0);
  for (int j = 1; j <= size(); ++j)
    if (at(j) != 0) inv[static_cast<std::size_t>(at(j) - 1)] = j;
  return Rook(std::move(inv));
}

std::string Rook::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(one_line_[i]);
  }
  s += ')';
  return s;
}

std::size_t RookHash::operator()(const Rook& x) const noexcept {
  std::size_t h = static_cast<std::size_t>(x.size());
  for (int v : x.one_line()) h = h * 31 + static_cast<std::size_t>(v);
  return h;
}

Rook parse_one_line(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')')
    throw InvalidArgument("expected parenthesized one-line notation, got '" +
                          std::string(text) + "'");
  std::vector<int> values;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  while (true) {
    auto comma = body.find(',');
    auto token = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InvalidArgument("bad entry '" + std::string(token) + "' in '" +
                            std::string(text) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Rook(std::move(values));
}

Rook parse_one_line(std::string_view text, int n) {
  Rook x = parse_one_line(text);
  if (x.size() != n)
    throw InvalidArgument("expected " + std::to_string(n) + " entries, got " +
                          std::to_string(x.size()));
  return x;
}

Rook multiply(const Rook& x, const Rook& y) {
  if (x.size() != y.size()) throw InvalidArgument("rook size mismatch in product");
  std::vector<int> out(static_cast<std::size_t>(y.size()), 0);
  for (int j = 1; j <= y.size(); ++j) {
    int mid = y.at(j);
    if (mid != 0) out[static_cast<std::size_t>(j - 1)] = x.at(mid);
  }
  return Rook(std::move(out));
}

Rook operator*(const Rook& x, const Rook& y) { return multiply(x, y); }

bool is_nilpotent_rook(const Rook& x) {
  // Follow j -> x_j.  A path either falls off (hits 0) or enters a cycle;
  // nilpotent iff every path falls off.  0 = unvisited, 1 = on stack, 2 = done.
  const int n = x.size();
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int j = start;
    while (j != 0 && state[static_cast<std::size_t>(j)] == 0) {
      state[static_cast<std::size_t>(j)] = 1;
      path.push_back(j);
      j = x.at(j);
    }
    if (j != 0 && state[static_cast<std::size_t>(j)] == 1) return false;
    for (int p : path) state[static_cast<std::size_t>(p)] = 2;
  }
  return true;
}

TriangularParts triangular_decompose(const Rook& x) {
  const auto n = static_cast<std::size_t>(x.size());
  std::vector<int> lower(n, 0), diag(n, 0), upper(n, 0);
  for (int j = 1; j <= x.size(); ++j) {
    const int v = x.at(j);
    const auto i = static_cast<std::size_t>(j - 1);
    if (v == 0) continue;
    if (v > j)
      lower[i] = v;
    else if (v == j)
      diag[i] = v;
    else
      upper[i] = v;
  }
  return {Rook(std::move(lower)), Rook(std::move(diag)), Rook(std::move(upper))};
}

Rook diagonal_idempotent(int n, const std::set<int>& support) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (int j : support) {
    if (j < 1 || j > n)
      throw InvalidArgument("support element " + std::to_string(j) +
                            " outside 1.." + std::to_string(n));
    v[static_cast<std::size_t>(j - 1)] = j;
  }
  return Rook(std::move(v));
}

Rook leading_idempotent(int n, int k) {
  if (k < 0 || k > n) throw InvalidArgument("idempotent rank out of range");
  std::set<int> support;
  for (int j = 1; j <= k; ++j) support.insert(j);
  return diagonal_idempotent(n, support);
}

namespace {

void rook_dfs(int n, int col, std::vector<int>& current, std::vector<bool>& used,
              const std::function<int(int)>& bound,
              const std::function<void(const Rook&)>& fn, std::optional<int> first) {
  if (col > n) {
    fn(Rook(current));
    return;
  }
  const int cap = bound ? std::min(n, bound(col)) : n;
  int lo = 0;
  int hi = cap;
  if (col == 1 && first) lo = hi = *first;
  for (int v = lo; v <= hi; ++v) {
    if (v != 0 && used[static_cast<std::size_t>(v)]) continue;
    current[static_cast<std::size_t>(col - 1)] = v;
    if (v != 0) used[static_cast<std::size_t>(v)] = true;
    rook_dfs(n, col + 1, current, used, bound, fn, first);
    if (v != 0) used[static_cast<std::size_t>(v)] = false;
  }
  current[static_cast<std::size_t>(col - 1)] = 0;
}

}  // namespace

void for_each_rook(int n, const std::function<int(int)>& bound,
                   const std::function<void(const Rook&)>& fn, std::optional<int> first_column) {
  if (n <= 0) throw InvalidArgument("rook size must be positive");
  if (first_column && (*first_column < 0 || *first_column > n)) return;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  rook_dfs(n, 1, current, used, bound, fn, first_column);
}

// --- exact rational matrices ----------------------------------------------

RationalMatrix::RationalMatrix(int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n <= 0) throw InvalidArgument("matrix size must be positive");
}

RationalMatrix::RationalMatrix(int n, std::vector<Rational> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n <= 0 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw InvalidArgument("matrix entries do not form a square");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rook(const Rook& x) {
  RationalMatrix m(x.size());
  for (int j = 1; j <= x.size(); ++j)
    if (x.at(j) != 0) m(x.at(j), j) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> entries) {
  RationalMatrix m(static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(static_cast<int>(i) + 1, static_cast<int>(i) + 1) = entries[i];
  return m;
}

RationalMatrix RationalMatrix::symplectic_form(int n) {
  if (n % 2 != 0) throw InvalidArgument("symplectic form needs even size");
  const int l = n / 2;
  RationalMatrix j(n);
  for (int i = 1; i <= l; ++i) {
    j(i, n + 1 - i) = 1;   // upper-right block J_l
    j(l + i, l + 1 - i) = -1;  // lower-left block -J_l
  }
  return j;
}

const Rational& RationalMatrix::operator()(int row, int col) const {
  return entries_[static_cast<std::size_t>((row - 1) * n_ + (col - 1))];
}

Rational& RationalMatrix::operator()(int row, int col) {
  return entries_[static_cast<std::size_t>((row - 1) * n_ + (col - 1))];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (n_ != other.n_) throw InvalidArgument("matrix size mismatch in product");
  RationalMatrix p(n_);
  for (int i = 1; i <= n_; ++i)
    for (int k = 1; k <= n_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 1; j <= n_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix s = *this;
  for (auto& e : s.entries_) e *= c;
  return s;
}

std::optional<Rational> msp_membership(const RationalMatrix& a) {
  const int n = a.size();
  if (n % 2 != 0) throw InvalidArgument("MSp membership needs even size");
  const RationalMatrix j = RationalMatrix::symplectic_form(n);
  const RationalMatrix left = a.transpose() * j * a;
  const RationalMatrix right = a * j * a.transpose();
  // J(1,n) = 1, so that entry of cJ reads off c.
  const Rational c = left(1, n);
  const RationalMatrix target = j.scaled(c);
  if (left == target && right == target) return c;
  return std::nullopt;
}

}  // namespace renner
