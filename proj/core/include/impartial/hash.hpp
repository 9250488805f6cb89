#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

namespace impartial {

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Hash functor covering the position types used by the bundled adapters:
// integers, pairs, arrays and vectors thereof. Anything else falls back to
// std::hash.
template <class T, class = void>
struct Hash {
  std::size_t operator()(const T& value) const { return std::hash<T>{}(value); }
};

template <class A, class B>
struct Hash<std::pair<A, B>> {
  std::size_t operator()(const std::pair<A, B>& p) const {
    return hash_combine(Hash<A>{}(p.first), Hash<B>{}(p.second));
  }
};

template <class T, std::size_t N>
struct Hash<std::array<T, N>> {
  std::size_t operator()(const std::array<T, N>& a) const {
    std::size_t seed = N;
    for (const auto& v : a) seed = hash_combine(seed, Hash<T>{}(v));
    return seed;
  }
};

template <class T>
struct Hash<std::vector<T>> {
  std::size_t operator()(const std::vector<T>& a) const {
    std::size_t seed = a.size();
    for (const auto& v : a) seed = hash_combine(seed, Hash<T>{}(v));
    return seed;
  }
};

}  // namespace impartial
