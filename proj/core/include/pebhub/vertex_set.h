#ifndef PEBHUB_VERTEX_SET_H_
#define PEBHUB_VERTEX_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pebhub {

// Upper bound on vertex count for every graph in the library. VertexSet is a
// single machine word.
inline constexpr int kMaxVertices = 64;

// A subset of {0, ..., n-1} stored as a bitmask. The ambient vertex count is
// not stored; callers keep sets inside the graph they came from.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(uint64_t bits) : bits_(bits) {}

  static VertexSet Of(std::initializer_list<int> vertices);
  static VertexSet FromVector(const std::vector<int>& vertices);
  // {0, ..., n-1}.
  static constexpr VertexSet Full(int n) {
    return VertexSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet Singleton(int v) {
    return VertexSet(uint64_t{1} << v);
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr void insert(int v) { bits_ |= uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(uint64_t{1} << v); }

  constexpr bool IsSubsetOf(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Smallest element; the set must be nonempty.
  constexpr int First() const { return std::countr_zero(bits_); }

  template <typename F>
  void ForEach(F&& f) const {
    for (uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  std::vector<int> ToVector() const;
  // "{0,2,5}"
  std::string DebugString() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  uint64_t bits_ = 0;
};

// Report ordering: by cardinality, then by the sorted index lists
// lexicographically.
bool CardinalityThenLexLess(VertexSet a, VertexSet b);

}  // namespace pebhub

#endif  // PEBHUB_VERTEX_SET_H_
