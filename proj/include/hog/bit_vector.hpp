#ifndef HOG_BIT_VECTOR_HPP
#define HOG_BIT_VECTOR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hog {

// Fixed-size packed boolean array.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), blocks_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }

  bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(blocks_.begin(), blocks_.end(), 0); }

  BitVector& operator&=(const BitVector& other) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= other.blocks_[b];
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(__builtin_popcountll(b));
    return c;
  }

  // '0'/'1' per bit, index 0 leftmost.
  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> blocks_;
};

// Recycling pool of equal-length bit vectors. Slots are reused after release,
// so allocated storage tracks the peak number of simultaneously live vectors.
class BitVectorPool {
 public:
  using Slot = std::uint32_t;

  explicit BitVectorPool(std::size_t bits) : bits_(bits) {}

  // Returns a cleared vector.
  Slot acquire() {
    Slot s;
    if (!free_.empty()) {
      s = free_.back();
      free_.pop_back();
      slots_[s].clear();
    } else {
      s = static_cast<Slot>(slots_.size());
      slots_.emplace_back(bits_);
    }
    peak_live_ = std::max(peak_live_, ++live_);
    return s;
  }

  void release(Slot s) {
    free_.push_back(s);
    --live_;
  }

  BitVector& operator[](Slot s) { return slots_[s]; }
  const BitVector& operator[](Slot s) const { return slots_[s]; }

  std::size_t live() const { return live_; }
  std::size_t peak_live() const { return peak_live_; }
  // Bytes of packed storage ever allocated by the pool.
  std::size_t allocated_bytes() const {
    return slots_.size() * ((bits_ + 63) / 64) * sizeof(std::uint64_t);
  }

 private:
  std::size_t bits_;
  std::vector<BitVector> slots_;
  std::vector<Slot> free_;
  std::size_t live_ = 0;
  std::size_t peak_live_ = 0;
};

}  // namespace hog

#endif  // HOG_BIT_VECTOR_HPP
