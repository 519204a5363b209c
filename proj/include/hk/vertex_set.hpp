#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

// Subset of the vertex range [1, n], n <= 64.  Bit v-1 is set iff v is a
// member, so the whole set fits one machine word and all set algebra is
// single instructions.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_mask(std::uint64_t m) { return VertexSet(m); }

  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint64_t{1} << (v - 1));
  }

  // {1, 2, ..., n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  constexpr bool contains(int v) const {
    return (bits_ >> (v - 1)) & std::uint64_t{1};
  }

  constexpr bool subset_of(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  // Smallest member; 0 on the empty set.
  int min() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  constexpr VertexSet with(int v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << (v - 1)));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1)));
  }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool operator<(VertexSet o) const { return bits_ < o.bits_; }

 private:
  constexpr explicit VertexSet(std::uint64_t b) : bits_(b) {}
  std::uint64_t bits_ = 0;
};

// "{1,3}"; "{}" for the empty set.
std::string format_set(VertexSet x);

// Comma-separated indices ("1,3") or "-" for the empty set.  Members must
// lie in [1, n].
VertexSet parse_set(std::string_view text, int n);

}  // namespace hk
