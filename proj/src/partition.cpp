#include "starwalk/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace starwalk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("partition must have at least one part");
  }
  for (int a : parts_) {
    if (a < 1) throw std::invalid_argument("partition parts must be positive");
  }
  if (!std::is_sorted(parts_.begin(), parts_.end())) {
    throw std::invalid_argument("partition parts must be nondecreasing");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::descriptor() const { return "S(" + to_string() + ")"; }

std::strong_ordering shortlex_compare(const Partition& alpha, const Partition& beta) {
  if (auto c = alpha.size() <=> beta.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(alpha.parts().begin(), alpha.parts().end(),
                                                beta.parts().begin(), beta.parts().end());
}

std::string_view to_string(SuccessorCase::Tag tag) {
  switch (tag) {
    case SuccessorCase::Tag::CaseI: return "CaseI";
    case SuccessorCase::Tag::CaseII: return "CaseII";
    case SuccessorCase::Tag::CaseIII: return "CaseIII";
    case SuccessorCase::Tag::Last: return "Last";
  }
  return "?";
}

namespace {

bool is_balanced(std::span<const int> a) { return a.back() - a.front() <= 1; }

}  // namespace

SuccessorCase classify_successor(const Partition& alpha) {
  const auto a = alpha.parts();
  const std::size_t k = a.size();
  SuccessorCase out;
  if (a.back() == 1) {
    out.tag = SuccessorCase::Tag::Last;
    return out;
  }
  // Balanced: every part is floor(n/k) or ceil(n/k).
  if (is_balanced(a)) {
    out.tag = SuccessorCase::Tag::CaseIII;
    return out;
  }
  if (k >= 2 && a[k - 2] <= a[k - 1] - 2) {
    out.tag = SuccessorCase::Tag::CaseI;
    return out;
  }
  // Largest j <= k-2 (1-based) with a_j <= a_k - 2; exists because the
  // partition is unbalanced and Case I failed.
  std::size_t j0 = k - 2;
  while (a[j0 - 1] > a[k - 1] - 2) --j0;
  const std::size_t j = j0 - 1;  // 0-based
  const long long lo = a[j];
  const long long b = a[k - 1] - 1;
  out.tag = SuccessorCase::Tag::CaseII;
  out.j = static_cast<int>(j + 1);
  for (std::size_t t = j + 1; t < k; ++t) {
    if (a[t] == b) ++out.p;
    else ++out.q;
  }
  long long tail = 0;
  for (std::size_t t = j; t < k; ++t) tail += a[t];
  out.f = tail - static_cast<long long>(k - 1 - j) * (lo + 1);
  return out;
}

std::optional<std::pair<Partition, SuccessorCase>> shortlex_successor(
    const Partition& alpha, int min_parts) {
  if (min_parts < 1) throw std::invalid_argument("min_parts must be at least 1");
  if (alpha.size() < static_cast<std::size_t>(min_parts)) {
    throw std::invalid_argument("partition " + alpha.to_string() + " has fewer than " +
                                std::to_string(min_parts) + " parts");
  }
  const SuccessorCase c = classify_successor(alpha);
  const auto a = alpha.parts();
  const std::size_t k = a.size();
  std::vector<int> next(a.begin(), a.end());
  switch (c.tag) {
    case SuccessorCase::Tag::Last:
      return std::nullopt;
    case SuccessorCase::Tag::CaseIII: {
      const long long n = alpha.total();
      next.assign(k, 1);
      next.push_back(static_cast<int>(n - static_cast<long long>(k)));
      break;
    }
    case SuccessorCase::Tag::CaseI:
      next[k - 2] += 1;
      next[k - 1] -= 1;
      break;
    case SuccessorCase::Tag::CaseII: {
      const std::size_t j = static_cast<std::size_t>(c.j - 1);
      const int raised = a[j] + 1;
      for (std::size_t t = j; t + 1 < k; ++t) next[t] = raised;
      next[k - 1] = static_cast<int>(c.f);
      break;
    }
  }
  return std::make_pair(Partition(std::move(next)), c);
}

Partition shortlex_minimum(int n, int min_parts) {
  if (min_parts < 1 || n < min_parts) {
    throw std::invalid_argument("need n >= min_parts >= 1");
  }
  std::vector<int> parts(static_cast<std::size_t>(min_parts - 1), 1);
  parts.push_back(n - min_parts + 1);
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_shortlex(int n, int min_parts) {
  std::vector<Partition> out;
  out.push_back(shortlex_minimum(n, min_parts));
  while (auto next = shortlex_successor(out.back(), min_parts)) {
    out.push_back(std::move(next->first));
  }
  return out;
}

ParsedPartition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  while (true) {
    skip_ws();
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    ++pos;
  }
  const bool sorted = std::is_sorted(parts.begin(), parts.end());
  return ParsedPartition{Partition::from_unsorted(std::move(parts)), !sorted};
}

}  // namespace starwalk
