#include "renner/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "renner/error.hpp"

namespace renner {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw InvalidArgument("partition ground set must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int total = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw InvalidArgument("empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > n)
        throw InvalidArgument("element " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw InvalidArgument("element " + std::to_string(v) + " appears twice");
      seen[static_cast<std::size_t>(v)] = true;
      ++total;
    }
  }
  if (total != n) throw InvalidArgument("blocks do not cover 1.." + std::to_string(n));
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string partition_standard_string(const SetPartition& p) {
  const bool commas = p.n() > 9;
  std::string s;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b) s += '|';
    const auto& block = p.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i && commas) s += ',';
      s += std::to_string(block[i]);
    }
  }
  return s;
}

namespace {

std::optional<int> parse_int(std::string_view token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

std::optional<SetPartition> try_build(int n, std::vector<std::vector<int>> blocks) {
  int largest = 0;
  for (const auto& b : blocks)
    for (int v : b) largest = std::max(largest, v);
  try {
    return SetPartition(n > 0 ? n : largest, std::move(blocks));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

}  // namespace

SetPartition parse_partition(std::string_view text, int n) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw InvalidArgument("empty partition text");
  const auto tokens = split(compact, '|');

  // Digit form: every character is one element.
  if (compact.find(',') == std::string::npos) {
    std::vector<std::vector<int>> blocks;
    bool digits_ok = true;
    for (auto t : tokens) {
      std::vector<int> block;
      for (char c : t) {
        if (!std::isdigit(static_cast<unsigned char>(c))) digits_ok = false;
        block.push_back(c - '0');
      }
      blocks.push_back(std::move(block));
    }
    if (digits_ok)
      if (auto p = try_build(n, blocks)) return *p;
  }
  // Comma form: elements separated by commas, so a bare token is one number.
  std::vector<std::vector<int>> blocks;
  for (auto t : tokens) {
    std::vector<int> block;
    for (auto e : split(t, ',')) {
      auto v = parse_int(e);
      if (!v) throw InvalidArgument("bad element '" + std::string(e) + "' in partition");
      block.push_back(*v);
    }
    blocks.push_back(std::move(block));
  }
  int largest = 0;
  for (const auto& b : blocks)
    for (int v : b) largest = std::max(largest, v);
  return SetPartition(n > 0 ? n : largest, std::move(blocks));
}

std::vector<SetPartition> all_set_partitions(int n) {
  if (n < 1) throw InvalidArgument("partition ground set must be nonempty");
  std::vector<SetPartition> out;
  // Restricted growth strings: g_1 = 0, g_i <= 1 + max(g_1..g_{i-1}).
  std::vector<int> g(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    const int k = *std::max_element(g.begin(), g.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.emplace_back(n, std::move(blocks));
  };
  auto rec = [&](auto&& self, int i, int max_so_far) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= max_so_far + 1; ++v) {
      g[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(max_so_far, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

Rook embed_nilpotent(const Rook& a) {
  if (!a.is_upper_triangular())
    throw InvalidArgument(a.to_string() + " is not upper triangular");
  std::vector<int> v(static_cast<std::size_t>(a.size()) + 1, 0);
  for (int j = 1; j <= a.size(); ++j) v[static_cast<std::size_t>(j)] = a.at(j);
  return Rook(std::move(v));
}

SetPartition rook_to_partition(const Rook& x) {
  if (!x.is_strictly_upper_triangular())
    throw InvalidArgument(x.to_string() + " is not strictly upper triangular");
  const int m = x.size();
  // Arc (x_j, j) links j back to its predecessor; walk each chain from its
  // head, i.e. a vertex that is not the target of an arc.
  std::vector<int> next(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 1; j <= m; ++j)
    if (x.at(j) != 0) next[static_cast<std::size_t>(x.at(j))] = j;
  std::vector<std::vector<int>> blocks;
  for (int head = 1; head <= m; ++head) {
    if (x.at(head) != 0) continue;
    std::vector<int> block;
    for (int v = head; v != 0; v = next[static_cast<std::size_t>(v)]) block.push_back(v);
    blocks.push_back(std::move(block));
  }
  return SetPartition(m, std::move(blocks));
}

Rook partition_to_rook(const SetPartition& p) {
  std::vector<int> v(static_cast<std::size_t>(p.n()), 0);
  for (const auto& block : p.blocks())
    for (std::size_t i = 1; i < block.size(); ++i)
      v[static_cast<std::size_t>(block[i] - 1)] = block[i - 1];
  return Rook(std::move(v));
}

}  // namespace renner
