#pragma once

// Test-side reference computations. They deliberately avoid the library's
// algorithms: classes come from conjugating by every element, orders from
// repeated multiplication, linear characters from brute-force homomorphism
// search, and character values are checked in floating point.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "pgzero/pgzero.hpp"

namespace oracle {

using pgzero::Group;
using pgzero::Index;

inline std::vector<std::vector<Index>> classes(const Group& G) {
  const Index n = static_cast<Index>(G.order());
  std::vector<int> seen(n, -1);
  std::vector<std::vector<Index>> out;
  for (Index x = 0; x < n; ++x) {
    if (seen[x] >= 0) continue;
    std::set<Index> orbit;
    for (Index g = 0; g < n; ++g) orbit.insert(G.mul(G.mul(G.inv(g), x), g));
    for (auto y : orbit) seen[y] = static_cast<int>(out.size());
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

inline std::vector<std::size_t> class_sizes_sorted(const Group& G) {
  std::vector<std::size_t> s;
  for (const auto& c : classes(G)) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

inline unsigned order_of(const Group& G, Index x) {
  unsigned k = 1;
  for (Index y = x; y != 0; y = G.mul(y, x)) ++k;
  return k;
}

inline std::size_t count_of_order(const Group& G, unsigned m) {
  std::size_t c = 0;
  for (Index x = 0; x < G.order(); ++x) c += order_of(G, x) == m;
  return c;
}

inline std::uint64_t exponent(const Group& G) {
  std::uint64_t e = 1;
  for (Index x = 0; x < G.order(); ++x) e = std::lcm(e, std::uint64_t{order_of(G, x)});
  return e;
}

/// Numerical value of a cyclotomic integer.
inline std::complex<double> value(const pgzero::CycInt& v) {
  const double e = v.conductor();
  std::complex<double> s = 0;
  const auto& c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s += static_cast<double>(c[i]) * std::polar(1.0, 2 * M_PI * static_cast<double>(i) / e);
  return s;
}

/// Coefficients of Phi_e from the product over primitive roots, rounded.
inline std::vector<std::int64_t> cyclotomic(unsigned e) {
  std::vector<std::complex<double>> poly{1.0};
  for (unsigned k = 1; k <= e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    const auto root = std::polar(1.0, 2 * M_PI * k / e);
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = next;
  }
  std::vector<std::int64_t> out;
  for (auto c : poly) out.push_back(std::llround(c.real()));
  return out;
}

/// All homomorphisms G -> Z/e (G abelian, e = exponent), as exponent vectors
/// over the element indices, found by trying every assignment of generator
/// images and propagating along the Cayley graph.
inline std::vector<std::vector<unsigned>> linear_characters(const Group& G, unsigned e) {
  const auto gens = G.generators();
  const std::size_t n = G.order();
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> images(gens.size(), 0);
  while (true) {
    std::vector<int> val(n, -1);
    val[0] = 0;
    std::vector<Index> queue{0};
    bool ok = true;
    for (std::size_t h = 0; h < queue.size() && ok; ++h) {
      const Index x = queue[h];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Index y = G.mul(x, gens[k]);
        const int v = static_cast<int>((val[x] + images[k]) % e);
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.emplace_back(val.begin(), val.end());
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == e) images[k++] = 0;
    if (k == images.size()) break;
  }
  return out;
}

/// 3x3 unitriangular matrices over F_3, stored as (a, b, c) for
/// [[1,a,c],[0,1,b],[0,0,1]].
struct Heis {
  int a, b, c;
  Heis operator*(const Heis& o) const { return {(a + o.a) % 3, (b + o.b) % 3, (c + o.c + a * o.b) % 3}; }
  bool operator==(const Heis&) const = default;
  Heis inverse() const {
    Heis r{(3 - a) % 3, (3 - b) % 3, 0};
    r.c = ((-c + a * b) % 3 + 9) % 3;
    return r;
  }
};

inline Heis power(Heis x, unsigned k) {
  Heis r{0, 0, 0};
  while (k--) r = r * x;
  return r;
}

}  // namespace oracle
