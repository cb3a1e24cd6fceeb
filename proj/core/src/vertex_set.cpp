#include "odcode/vertex_set.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace odcode {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) set(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members)
    : VertexSet(universe) {
  for (Vertex v : members) set(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

void VertexSet::set(Vertex v) {
  if (v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::reset(Vertex v) {
  if (v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(__builtin_popcountll(words_[i] & other.words_[i]));
  }
  return c;
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i]));
  }
  return npos;
}

Vertex VertexSet::next(Vertex v) const {
  if (v == npos || v + 1 >= universe_) return npos;
  Vertex start = v + 1;
  std::size_t i = start >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w != 0) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(w));
    if (++i >= words_.size()) return npos;
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string(std::size_t offset) const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) os << ',';
    os << v + offset;
    first_member = false;
  });
  os << '}';
  return os.str();
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t VertexSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  assert(a.universe() == b.universe());
  const VertexSet diff = a ^ b;
  const Vertex d = diff.first();
  if (d == VertexSet::npos) return false;
  // Both sequences agree below d. The one holding d continues with d; the
  // other continues with its next member above d, or ends.
  if (a.test(d)) return b.next(d) != VertexSet::npos;
  return a.next(d) == VertexSet::npos;
}

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.to_string(); }

}  // namespace odcode
