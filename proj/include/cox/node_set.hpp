#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cox {

// A set of node indices of one symbol, packed into a word. Symbols are capped
// at 32 nodes, well above anything the library enumerates.
class NodeSet {
 public:
  static constexpr int kCapacity = 32;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr NodeSet all(int n) {
    return NodeSet(n >= kCapacity ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }
  static constexpr NodeSet single(int i) { return NodeSet(std::uint32_t{1} << i); }
  static NodeSet of(std::initializer_list<int> nodes) {
    NodeSet s;
    for (int i : nodes) s = s.with(i);
    return s;
  }
  static NodeSet of(const std::vector<int>& nodes) {
    NodeSet s;
    for (int i : nodes) s = s.with(i);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr NodeSet with(int i) const { return NodeSet(bits_ | (std::uint32_t{1} << i)); }
  constexpr NodeSet without(int i) const { return NodeSet(bits_ & ~(std::uint32_t{1} << i)); }
  constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr int first() const { return std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const NodeSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// Lexicographic comparison of the sorted member lists; used for canonical forms.
inline bool lex_less(NodeSet a, NodeSet b) {
  std::vector<int> x = a.members(), y = b.members();
  return x < y;
}

}  // namespace cox
