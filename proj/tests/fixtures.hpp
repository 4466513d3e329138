#pragma once

// Fixture pairs found by an offline search over d = 1 integer polynomials with
// support <= 4 and mass <= 8: each passes the strict spectral check exactly
// while direct dominance fails.

#include "vgl/poly.hpp"

namespace fixtures {

struct Pair {
  const char* name;
  const char* p;
  const char* q;
};

inline constexpr Pair kMain{"main", "1 + x1^2 + x1^3", "2*x1 + x1^4"};
inline constexpr Pair kSecond{"second", "1 + 2*x1^2", "2*x1 + x1^3"};
inline constexpr Pair kThird{"third", "1 + 2*x1^3", "x1 + x1^2 + x1^4"};

inline constexpr Pair kCatalystFree[] = {
    {"generator", "1", "x1"},
    {"identity", "1 + x1*x2", "1 + x1*x2"},
    {"diagonal", "x1 + x2", "2*x1*x2"},
    {"chain", "1 + x1 + x2", "x1 + x2^2 + x1*x2"},
};

inline vgl::SparsePoly poly(const char* text) { return vgl::parse_poly(text); }

}  // namespace fixtures
