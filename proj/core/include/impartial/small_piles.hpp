#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>

#include "impartial/hash.hpp"

namespace impartial {

/// Fixed-capacity pile vector used by the brute-force game adapters. Oracle
/// sweeps generate hundreds of millions of successor positions, so positions
/// must be trivially copyable and allocation-free.
class SmallPiles {
 public:
  static constexpr std::size_t kCapacity = 8;
  using value_type = std::uint16_t;

  SmallPiles() = default;
  explicit SmallPiles(std::size_t n) : size_(static_cast<std::uint8_t>(n)) {
    if (n > kCapacity) throw std::length_error("SmallPiles capacity exceeded");
  }
  SmallPiles(std::initializer_list<unsigned> values) : SmallPiles(values.size()) {
    std::size_t i = 0;
    for (unsigned v : values) data_[i++] = static_cast<value_type>(v);
  }

  std::size_t size() const { return size_; }
  value_type operator[](std::size_t i) const { return data_[i]; }
  value_type& operator[](std::size_t i) { return data_[i]; }
  const value_type* begin() const { return data_.data(); }
  const value_type* end() const { return data_.data() + size_; }

  friend bool operator==(const SmallPiles& a, const SmallPiles& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend bool operator<(const SmallPiles& a, const SmallPiles& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
  friend std::ostream& operator<<(std::ostream& os, const SmallPiles& p) {
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    return os << ')';
  }

 private:
  std::array<value_type, kCapacity> data_{};
  std::uint8_t size_ = 0;
};

template <>
struct Hash<SmallPiles> {
  std::size_t operator()(const SmallPiles& p) const {
    std::size_t seed = p.size();
    for (auto v : p) seed = hash_combine(seed, v);
    return seed;
  }
};

}  // namespace impartial
