#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starwalk {

/// An integer partition stored with its parts in nondecreasing order,
/// e.g. (1,2,3) for 6. Parts are branch lengths of a starlike tree.
class Partition {
 public:
  /// Throws std::invalid_argument unless `parts` is nonempty, positive and
  /// sorted nondecreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts `parts` first; same validation otherwise.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }
  /// Sum of the parts.
  long long total() const noexcept { return total_; }

  /// "1,2,3"
  std::string to_string() const;
  /// "S(1,2,3)"
  std::string descriptor() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  long long total_ = 0;
};

/// Shortlex order: shorter sequences first, then lexicographic on parts.
/// Sums are not required to match.
std::strong_ordering shortlex_compare(const Partition& alpha, const Partition& beta);

/// How the shortlex successor of a partition is produced.
struct SuccessorCase {
  enum class Tag { CaseI, CaseII, CaseIII, Last };

  Tag tag = Tag::Last;
  // CaseII only. `j` is the 1-based index of the first changed part; `p` and
  // `q` count the following parts equal to b = a_k - 1 and b + 1; `f` is the
  // new last part.
  int j = 0;
  int p = 0;
  int q = 0;
  long long f = 0;

  friend bool operator==(const SuccessorCase&, const SuccessorCase&) = default;
};

std::string_view to_string(SuccessorCase::Tag tag);

/// Which of the three successor rules applies to `alpha` (Last for (1,...,1)).
SuccessorCase classify_successor(const Partition& alpha);

/// Immediate successor of `alpha` in shortlex order among partitions of the
/// same total with at least `min_parts` parts, or nullopt at the maximum
/// (1,...,1). Throws std::invalid_argument if alpha has fewer than
/// `min_parts` parts.
std::optional<std::pair<Partition, SuccessorCase>> shortlex_successor(
    const Partition& alpha, int min_parts = 3);

/// Smallest partition of n with at least `min_parts` parts: (1,...,1,n-m+1).
Partition shortlex_minimum(int n, int min_parts);

/// All partitions of n with at least `min_parts` parts, in increasing
/// shortlex order. Throws std::invalid_argument unless n >= min_parts >= 1.
std::vector<Partition> enumerate_shortlex(int n, int min_parts = 3);

struct ParsedPartition {
  Partition partition;
  /// True when the input was not already nondecreasing.
  bool reordered = false;
};

/// Parses "1,2,3" (whitespace tolerated). Throws std::invalid_argument on
/// malformed input.
ParsedPartition parse_partition(std::string_view text);

}  // namespace starwalk
