#pragma once

#include <cstddef>
#include <iterator>

#include "selfdual/hypergraph.hpp"

namespace selfdual {

// All n-bit masks with exactly k bits set, in ascending numeric order.
//
//   for (Assignment x : FixedWeightMasks(n, k)) { ... }
//
// Steps with Gosper's next-combination trick, O(1) per mask.
class FixedWeightMasks {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EdgeMask;
    using difference_type = std::ptrdiff_t;
    using pointer = const EdgeMask*;
    using reference = EdgeMask;

    iterator() = default;
    iterator(EdgeMask current, EdgeMask limit) : current_(current), limit_(limit) {}

    EdgeMask operator*() const { return current_; }

    iterator& operator++() {
      if (current_ == 0) {
        current_ = limit_;
        return *this;
      }
      const EdgeMask low = current_ & (~current_ + 1);
      const EdgeMask ripple = current_ + low;
      current_ = (((ripple ^ current_) >> 2) / low) | ripple;
      if (current_ > limit_) {
        current_ = limit_;
      }
      return *this;
    }

    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }

    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    EdgeMask current_ = 0;
    EdgeMask limit_ = 0;
  };

  /// Requires k <= n <= kMaxVertices.
  FixedWeightMasks(unsigned n, unsigned k) : limit_(EdgeMask{1} << n), first_(k > n ? limit_ : universe_mask(k)) {}

  iterator begin() const { return {first_, limit_}; }
  iterator end() const { return {limit_, limit_}; }

 private:
  EdgeMask limit_;
  EdgeMask first_;
};

}  // namespace selfdual
