#pragma once

// Partitions of {1..n} with no class containing consecutive integers and no
// two classes interleaving (a < b < c < d with a, c in one class and b, d in
// another). Every such partition has at least floor(n/2) + 1 classes.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgrowth {

using Block = std::vector<int>;

struct NCViolation {
  enum class Kind { adjacency, crossing };
  Kind kind;
  /// (i, i+1) for adjacency; (a, b, c, d) for crossing.
  std::vector<int> witness;

  std::string describe() const;
};

class NCViolationError : public std::invalid_argument {
 public:
  explicit NCViolationError(NCViolation v)
      : std::invalid_argument(v.describe()), violation_(std::move(v)) {}
  const NCViolation& violation() const { return violation_; }

 private:
  NCViolation violation_;
};

/// A validated relation. Blocks are sorted internally and ordered by their
/// smallest element.
class NCRelation {
 public:
  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  friend bool operator==(const NCRelation&, const NCRelation&) = default;

 private:
  friend NCRelation validate(int n, std::vector<Block> blocks);
  NCRelation(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_;
  std::vector<Block> blocks_;
};

/// Throws std::invalid_argument when `blocks` is not a partition of {1..n},
/// NCViolationError when a condition fails.
NCRelation validate(int n, std::vector<Block> blocks);

/// First violated condition, or nothing. Requires a partition of {1..n}.
std::optional<NCViolation> find_violation(int n, const std::vector<Block>& blocks);

std::size_t class_count(const NCRelation& r);

/// Odd numbers in one class, each even number alone.
NCRelation extremal_example(int n);

inline constexpr int kDefaultEnumerationCap = 12;

/// Calls `visit` once per valid relation on {1..n}, in lexicographic order of
/// restricted-growth strings. Throws std::invalid_argument when n > cap.
void enumerate_valid(int n, const std::function<void(const NCRelation&)>& visit,
                     int cap = kDefaultEnumerationCap);

std::vector<NCRelation> enumerate_valid(int n, int cap = kDefaultEnumerationCap);

std::size_t min_classes(int n, int cap = kDefaultEnumerationCap);

/// floor(n/2) + 1.
inline std::size_t class_lower_bound(int n) { return static_cast<std::size_t>(n / 2 + 1); }

}  // namespace pgrowth
