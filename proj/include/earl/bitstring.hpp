#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "earl/rng.hpp"

namespace earl {

// Fixed-length bit string with a cached ones count. Bits are packed into
// 64-bit words; position 0 is the leftmost character of the textual form.
class BitString {
 public:
  explicit BitString(std::size_t n) : n_(n), ones_(0), words_((n + 63) / 64, 0) {
    if (n == 0) throw std::invalid_argument("BitString: length must be at least 1");
  }

  static BitString from_string(std::string_view s);
  std::string to_string() const;

  std::size_t size() const { return n_; }
  std::size_t ones() const { return ones_; }

  bool get(std::size_t pos) const {
    check_pos(pos);
    return (words_[pos >> 6] >> (pos & 63)) & 1u;
  }

  void set(std::size_t pos, bool value) {
    if (get(pos) != value) flip(pos);
  }

  void flip(std::size_t pos) {
    check_pos(pos);
    std::uint64_t& w = words_[pos >> 6];
    const std::uint64_t bit = 1ULL << (pos & 63);
    if (w & bit)
      --ones_;
    else
      ++ones_;
    w ^= bit;
  }

  // Length of the maximal all-ones prefix.
  std::size_t leading_ones() const {
    std::size_t count = 0;
    for (const std::uint64_t w : words_) {
      const int c = std::countr_one(w);
      count += static_cast<std::size_t>(c);
      if (c < 64) break;
    }
    return count < n_ ? count : n_;
  }

  bool operator==(const BitString&) const = default;

  friend std::size_t hamming_distance(const BitString& a, const BitString& b);
  friend BitString random_bitstring(std::size_t n, Rng& rng);

 private:
  void check_pos(std::size_t pos) const {
    if (pos >= n_) throw std::out_of_range("BitString: position out of range");
  }

  std::size_t n_;
  std::size_t ones_;
  std::vector<std::uint64_t> words_;  // unused high bits of the last word stay 0
};

// Uniform random string: each bit independently 1 with probability 1/2.
BitString random_bitstring(std::size_t n, Rng& rng);

// Copy of y with exactly one uniformly chosen position flipped.
BitString flip_one(const BitString& y, Rng& rng);

std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace earl
