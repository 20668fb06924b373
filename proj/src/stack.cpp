#include "pancake/stack.hpp"

#include <algorithm>
#include <cstdlib>

namespace pancake {

bool BurntStack::sorted() const {
  for (int i = 0; i < size(); ++i)
    if (entries[i] != i + 1) return false;
  return true;
}

bool UnburntStack::sorted() const {
  for (int i = 0; i < size(); ++i)
    if (entries[i] != i + 1) return false;
  return true;
}

bool MixedStack::sorted() const {
  for (int i = 0; i < size(); ++i) {
    if (entries[i].label != i + 1) return false;
    if (entries[i].orient == Orientation::Up) return false;
  }
  return true;
}

int MixedStack::burnt_count() const {
  int b = 0;
  for (const auto& e : entries)
    if (e.orient != Orientation::Unburnt) ++b;
  return b;
}

BurntStack make_special(SpecialKind kind, int n) {
  if (n < 1) throw std::invalid_argument("stack size must be at least 1");
  if (kind == SpecialKind::Y && n < 2)
    throw std::invalid_argument("Y_n requires n >= 2");
  BurntStack s;
  s.entries.resize(n);
  for (int i = 0; i < n; ++i)
    s.entries[i] = (kind == SpecialKind::Identity) ? i + 1 : -(i + 1);
  if (kind == SpecialKind::J) s.entries[0] = 1;
  if (kind == SpecialKind::Y) s.entries[n - 2] = n - 1;
  return s;
}

namespace {

void check_flip_size(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("flip size out of range");
}

}  // namespace

void flip_in_place(BurntStack& s, int i) {
  check_flip_size(i, s.size());
  std::reverse(s.entries.begin(), s.entries.begin() + i);
  for (int p = 0; p < i; ++p) s.entries[p] = -s.entries[p];
}

void flip_in_place(UnburntStack& s, int i) {
  check_flip_size(i, s.size());
  if (i <= 1) return;
  std::reverse(s.entries.begin(), s.entries.begin() + i);
}

void flip_in_place(MixedStack& s, int i) {
  check_flip_size(i, s.size());
  std::reverse(s.entries.begin(), s.entries.begin() + i);
  for (int p = 0; p < i; ++p) {
    auto& o = s.entries[p].orient;
    o = static_cast<Orientation>(-static_cast<std::int8_t>(o));
  }
}

BurntStack negate(const BurntStack& s) {
  BurntStack r = s;
  for (auto& e : r.entries) e = -e;
  return r;
}

namespace {

void check_permutation(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw std::invalid_argument("stack must have at least 1 pancake");
  std::vector<char> seen(n + 1, 0);
  for (int v : labels) {
    if (v < 1 || v > n) throw std::invalid_argument("label out of range");
    if (seen[v]++) throw std::invalid_argument("duplicate label");
  }
}

}  // namespace

void validate(const BurntStack& s) {
  std::vector<int> labels;
  labels.reserve(s.entries.size());
  for (int e : s.entries) {
    if (e == 0) throw std::invalid_argument("zero entry in burnt stack");
    labels.push_back(std::abs(e));
  }
  check_permutation(labels);
}

void validate(const UnburntStack& s) { check_permutation(s.entries); }

void validate(const MixedStack& s) {
  std::vector<int> labels;
  labels.reserve(s.entries.size());
  for (const auto& e : s.entries) labels.push_back(e.label);
  check_permutation(labels);
}

AnyStack FlipTrace::replay() const {
  AnyStack cur = start;
  for (int f : flips)
    std::visit([&](auto& s) { flip_in_place(s, f); }, cur);
  return cur;
}

bool FlipTrace::ends_sorted() const { return is_sorted(replay()); }

bool is_sorted(const AnyStack& s) {
  return std::visit([](const auto& v) { return v.sorted(); }, s);
}

}  // namespace pancake
