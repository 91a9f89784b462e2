#include "pgrowth/noncrossing.hpp"

#include <algorithm>
#include <limits>

namespace pgrowth {

std::string NCViolation::describe() const {
  std::string s = kind == Kind::adjacency ? "adjacency violation at (" : "crossing violation at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(witness[i]);
  }
  return s + ")";
}

namespace {

// label[i] = block index of element i (1-based; label[0] unused).
std::vector<int> labels_of(int n, const std::vector<Block>& blocks) {
  std::vector<int> label(static_cast<std::size_t>(n) + 1, -1);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int x : blocks[b]) {
      if (x < 1 || x > n) throw std::invalid_argument("element " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (label[x] != -1) throw std::invalid_argument("element " + std::to_string(x) + " appears twice");
      label[x] = static_cast<int>(b);
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(n)) throw std::invalid_argument("blocks do not cover 1..n");
  return label;
}

std::optional<NCViolation> violation_in_labels(int n, const std::vector<int>& label) {
  for (int i = 1; i < n; ++i) {
    if (label[i] == label[i + 1]) return NCViolation{NCViolation::Kind::adjacency, {i, i + 1}};
  }
  // For each pair of positions b < d in one class, a crossing exists iff some
  // other class has an element before b and one strictly between b and d.
  for (int b = 1; b <= n; ++b) {
    for (int d = b + 1; d <= n; ++d) {
      if (label[b] != label[d]) continue;
      for (int c = b + 1; c < d; ++c) {
        if (label[c] == label[b]) continue;
        for (int a = 1; a < b; ++a) {
          if (label[a] == label[c]) return NCViolation{NCViolation::Kind::crossing, {a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Block> normalized(std::vector<Block> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.front() < y.front(); });
  return blocks;
}

}  // namespace

std::optional<NCViolation> find_violation(int n, const std::vector<Block>& blocks) {
  return violation_in_labels(n, labels_of(n, blocks));
}

NCRelation validate(int n, std::vector<Block> blocks) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (auto v = find_violation(n, blocks)) throw NCViolationError(*v);
  return NCRelation(n, normalized(std::move(blocks)));
}

std::size_t class_count(const NCRelation& r) { return r.blocks().size(); }

NCRelation extremal_example(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Block> blocks;
  Block odds;
  for (int i = 1; i <= n; i += 2) odds.push_back(i);
  blocks.push_back(std::move(odds));
  for (int i = 2; i <= n; i += 2) blocks.push_back({i});
  return validate(n, std::move(blocks));
}

void enumerate_valid(int n, const std::function<void(const NCRelation&)>& visit, int cap) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > cap) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
  // Restricted-growth string over positions 1..n with incremental pruning:
  // when position i joins block L, the only new crossings have i as their
  // largest element, and they exist iff another block has an element before
  // and after the latest earlier member of L.
  std::vector<int> label(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> last(static_cast<std::size_t>(n), 0);

  std::function<void(int, int)> place = [&](int i, int used) {
    if (i > n) {
      std::vector<Block> blocks(static_cast<std::size_t>(used));
      for (int x = 1; x <= n; ++x) blocks[label[x]].push_back(x);
      visit(validate(n, std::move(blocks)));
      return;
    }
    for (int l = 0; l <= used; ++l) {
      if (i > 1 && label[i - 1] == l) continue;
      if (l < used) {
        const int b = last[l];
        bool crossing = false;
        for (int c = b + 1; c < i && !crossing; ++c) {
          for (int a = 1; a < b; ++a) {
            if (label[a] == label[c]) {
              crossing = true;
              break;
            }
          }
        }
        if (crossing) continue;
      }
      const int saved = last[l];
      label[i] = l;
      last[l] = i;
      place(i + 1, l == used ? used + 1 : used);
      last[l] = saved;
      label[i] = -1;
    }
  };
  place(1, 0);
}

std::vector<NCRelation> enumerate_valid(int n, int cap) {
  std::vector<NCRelation> out;
  enumerate_valid(n, [&](const NCRelation& r) { out.push_back(r); }, cap);
  return out;
}

std::size_t min_classes(int n, int cap) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  enumerate_valid(n, [&](const NCRelation& r) { best = std::min(best, class_count(r)); }, cap);
  return best;
}

}  // namespace pgrowth
