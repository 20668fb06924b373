#include "pancake/ranking.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace pancake {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("stack count does not fit in 64 bits");
  return a * b;
}

// Lehmer code of the label sequence, identity -> 0.
std::uint64_t lehmer_rank(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (labels[j] < labels[i]) ++smaller;
    r = r * (n - i) + smaller;
  }
  return r;
}

std::vector<int> lehmer_unrank(std::uint64_t index, int n) {
  std::vector<int> digits(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(index % (n - i));
    index /= (n - i);
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return labels;
}

}  // namespace

std::uint64_t stack_count(int n, Variant variant) {
  if (n < 1) throw std::invalid_argument("stack size must be at least 1");
  std::uint64_t c = 1;
  for (int i = 2; i <= n; ++i) c = checked_mul(c, i);
  if (variant == Variant::Burnt)
    for (int i = 0; i < n; ++i) c = checked_mul(c, 2);
  return c;
}

std::uint64_t rank(const BurntStack& s) {
  const int n = s.size();
  std::vector<int> labels(n);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    labels[i] = std::abs(s.entries[i]);
    if (s.entries[i] < 0) bits |= std::uint64_t{1} << i;
  }
  return (lehmer_rank(labels) << n) | bits;
}

std::uint64_t rank(const UnburntStack& s) { return lehmer_rank(s.entries); }

BurntStack unrank_burnt(std::uint64_t index, int n) {
  if (index >= stack_count(n, Variant::Burnt))
    throw std::invalid_argument("rank index out of range");
  const std::uint64_t bits = index & ((std::uint64_t{1} << n) - 1);
  auto labels = lehmer_unrank(index >> n, n);
  BurntStack s;
  s.entries.resize(n);
  for (int i = 0; i < n; ++i)
    s.entries[i] = (bits >> i) & 1 ? -labels[i] : labels[i];
  return s;
}

UnburntStack unrank_unburnt(std::uint64_t index, int n) {
  if (index >= stack_count(n, Variant::Unburnt))
    throw std::invalid_argument("rank index out of range");
  return UnburntStack{lehmer_unrank(index, n)};
}

}  // namespace pancake
