#include "earl/bitstring.hpp"

#include <bit>

namespace earl {

BitString BitString::from_string(std::string_view s) {
  BitString y(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      y.flip(i);
    else if (s[i] != '0')
      throw std::invalid_argument("BitString: string must contain only '0' and '1'");
  }
  return y;
}

std::string BitString::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitString random_bitstring(std::size_t n, Rng& rng) {
  BitString y(n);
  for (auto& w : y.words_) w = rng.next_u64();
  if (n & 63) y.words_.back() &= (1ULL << (n & 63)) - 1;
  std::size_t ones = 0;
  for (const auto w : y.words_) ones += static_cast<std::size_t>(std::popcount(w));
  y.ones_ = ones;
  return y;
}

BitString flip_one(const BitString& y, Rng& rng) {
  BitString out = y;
  out.flip(rng.next_index(static_cast<std::uint32_t>(y.size())));
  return out;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: lengths differ");
  std::size_t dist = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    dist += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
  return dist;
}

}  // namespace earl
