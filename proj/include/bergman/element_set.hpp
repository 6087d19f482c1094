#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bergman {

// Ground sets are small (at most max_elements), so subsets of the ground set
// are plain bitmasks.  Inclusion is mask subset; the canonical order on
// subsets is the integer order on masks, which refines inclusion.
class ElementSet {
 public:
  static constexpr int max_elements = 20;

  constexpr ElementSet() : bits_(0) {}
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ElementSet full(int n) {
    return ElementSet(n == 0 ? 0u : (std::uint32_t(1) << n) - 1u);
  }
  static constexpr ElementSet single(int e) {
    return ElementSet(std::uint32_t(1) << e);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  // set difference
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  constexpr ElementSet with(int e) const {
    return ElementSet(bits_ | (std::uint32_t(1) << e));
  }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr bool operator<(ElementSet o) const { return bits_ < o.bits_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint32_t bits_;
};

}  // namespace bergman
