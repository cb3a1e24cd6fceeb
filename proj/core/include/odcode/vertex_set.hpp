#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace odcode {

using Vertex = std::size_t;

// Fixed-universe bitset over {0, ..., universe-1}. Binary operations require
// both operands to share the same universe.
class VertexSet {
 public:
  static constexpr Vertex npos = std::numeric_limits<Vertex>::max();

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, const std::vector<Vertex>& members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool test(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void set(Vertex v);
  void reset(Vertex v);
  void clear();

  std::size_t count() const;
  bool empty() const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  std::size_t intersection_count(const VertexSet& other) const;

  // Smallest member, or npos.
  Vertex first() const;
  // Smallest member strictly greater than v, or npos.
  Vertex next(Vertex v) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;
  // "{0,2,5}" with an optional offset added to every member.
  std::string to_string(std::size_t offset = 0) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator^=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;

  std::size_t hash() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Compares the ascending member sequences lexicographically.
bool lex_less(const VertexSet& a, const VertexSet& b);

// Orders by cardinality first, then lex_less. Used for every deterministic
// listing of edges and codes.
bool size_lex_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace odcode
