#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

namespace mids {

using vertex_id = std::uint32_t;

/// Fixed-capacity bitset over the vertex ids 0..capacity-1.
///
/// Every instance derived from one graph shares the same capacity, so the
/// binary set operations assume equal capacities.
class VertexSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity, bool full = false)
      : words_((capacity + word_bits - 1) / word_bits, full ? ~word_type{0} : 0),
        capacity_(capacity) {
    if (full) trim();
  }

  static VertexSet of(std::size_t capacity, std::initializer_list<vertex_id> ids) {
    VertexSet s(capacity);
    for (auto v : ids) s.insert(v);
    return s;
  }

  std::size_t capacity() const noexcept { return capacity_; }

  bool contains(vertex_id v) const noexcept {
    assert(v < capacity_);
    return (words_[v / word_bits] >> (v % word_bits)) & 1U;
  }
  void insert(vertex_id v) noexcept {
    assert(v < capacity_);
    words_[v / word_bits] |= word_type{1} << (v % word_bits);
  }
  void erase(vertex_id v) noexcept {
    assert(v < capacity_);
    words_[v / word_bits] &= ~(word_type{1} << (v % word_bits));
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Size of the intersection without materialising it.
  std::size_t intersection_size(const VertexSet& o) const noexcept {
    assert(o.capacity_ == capacity_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  /// |this ∩ a ∩ b|
  std::size_t intersection_size(const VertexSet& a, const VertexSet& b) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & a.words_[i] & b.words_[i]));
    return c;
  }
  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lowest member >= from, or capacity() if none.
  vertex_id next(std::size_t from) const noexcept {
    if (from >= capacity_) return static_cast<vertex_id>(capacity_);
    std::size_t wi = from / word_bits;
    word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (w) return static_cast<vertex_id>(wi * word_bits + std::countr_zero(w));
      if (++wi >= words_.size()) return static_cast<vertex_id>(capacity_);
      w = words_[wi];
    }
  }
  vertex_id first() const noexcept { return next(0); }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = vertex_id;
    using difference_type = std::ptrdiff_t;
    using pointer = const vertex_id*;
    using reference = vertex_id;

    iterator() = default;
    iterator(const VertexSet* s, vertex_id pos) : set_(s), pos_(pos) {}
    vertex_id operator*() const noexcept { return pos_; }
    iterator& operator++() noexcept {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    iterator operator++(int) noexcept {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.pos_ == b.pos_;
    }

   private:
    const VertexSet* set_ = nullptr;
    vertex_id pos_ = 0;
  };

  iterator begin() const noexcept { return {this, first()}; }
  iterator end() const noexcept { return {this, static_cast<vertex_id>(capacity_)}; }

  std::vector<vertex_id> to_vector() const {
    std::vector<vertex_id> out;
    out.reserve(size());
    for (auto v : *this) out.push_back(v);
    return out;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ std::hash<word_type>{}(w)) * 0x100000001b3ULL;
    return h;
  }

 private:
  void trim() noexcept {
    if (capacity_ % word_bits && !words_.empty())
      words_.back() &= (word_type{1} << (capacity_ % word_bits)) - 1;
  }

  std::vector<word_type> words_;
  std::size_t capacity_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace mids
