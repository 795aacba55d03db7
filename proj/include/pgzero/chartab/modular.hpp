#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pgzero/errors.hpp"
#include "pgzero/util/numeric.hpp"

namespace pgzero {

struct ModularPrime {
  std::uint64_t ell = 0;
  /// A primitive e-th root of unity modulo ell.
  std::uint64_t z = 0;
};

/// Smallest prime ell = 1 (mod e) with ell > 2 sqrt(order), and
/// z = g^{(ell-1)/e} for the smallest primitive root g.
inline ModularPrime choose_prime(std::uint64_t order, std::uint64_t e) {
  if (e == 0 || order == 0) throw DomainError("choose_prime: order and exponent must be positive");
  constexpr std::uint64_t cap = std::uint64_t{1} << 31;
  for (std::uint64_t ell = e + 1; ell < cap; ell += e) {
    if (static_cast<unsigned __int128>(ell) * ell <= static_cast<unsigned __int128>(4) * order) continue;
    if (!is_prime(ell)) continue;
    const std::uint64_t g = primitive_root(ell);
    return {ell, pow_mod(g, (ell - 1) / e, ell)};
  }
  throw DomainError("choose_prime: no prime below 2^31 for exponent " + std::to_string(e));
}

/// Dense matrices over F_ell, row-major.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t ell) : r_(rows), c_(cols), ell_(ell), a_(rows * cols, 0) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::uint64_t modulus() const { return ell_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < c_; ++t) std::swap((*this)(i, t), (*this)(j, t));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < r_; ++t) std::swap((*this)(t, i), (*this)(t, j));
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t p = row;
      while (p < r_ && (*this)(p, col) == 0) ++p;
      if (p == r_) continue;
      swap_rows(p, row);
      const std::uint64_t inv = inv_mod((*this)(row, col), ell_);
      for (std::size_t t = col; t < c_; ++t) (*this)(row, t) = mul_mod((*this)(row, t), inv, ell_);
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row) continue;
        const std::uint64_t f = (*this)(i, col);
        if (f == 0) continue;
        for (std::size_t t = col; t < c_; ++t)
          (*this)(i, t) = ((*this)(i, t) + ell_ - mul_mod(f, (*this)(row, t), ell_)) % ell_;
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  /// Basis of the right null space {x : A x = 0}.
  std::vector<std::vector<std::uint64_t>> nullspace() const {
    ModMatrix m = *this;
    auto pivots = m.rref();
    std::vector<char> is_pivot(c_, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t f = 0; f < c_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<std::uint64_t> x(c_, 0);
      x[f] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = (ell_ - m(r, f)) % ell_;
      out.push_back(std::move(x));
    }
    return out;
  }

  /// Characteristic polynomial det(xI - A), ascending coefficients, via
  /// reduction to Hessenberg form.
  std::vector<std::uint64_t> charpoly() const {
    if (r_ != c_) throw DomainError("charpoly: matrix not square");
    const std::size_t n = r_;
    const std::uint64_t p = ell_;
    ModMatrix h = *this;
    for (std::size_t c = 0; c + 2 < n; ++c) {
      std::size_t piv = c + 1;
      while (piv < n && h(piv, c) == 0) ++piv;
      if (piv == n) continue;
      if (piv != c + 1) {
        h.swap_rows(piv, c + 1);
        h.swap_cols(piv, c + 1);
      }
      const std::uint64_t inv = inv_mod(h(c + 1, c), p);
      for (std::size_t i = c + 2; i < n; ++i) {
        const std::uint64_t u = mul_mod(h(i, c), inv, p);
        if (u == 0) continue;
        for (std::size_t t = 0; t < n; ++t) h(i, t) = (h(i, t) + p - mul_mod(u, h(c + 1, t), p)) % p;
        for (std::size_t t = 0; t < n; ++t) h(t, c + 1) = (h(t, c + 1) + mul_mod(u, h(t, i), p)) % p;
      }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    std::vector<std::vector<std::uint64_t>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
      const auto& prev = polys[m - 1];
      std::vector<std::uint64_t> cur(m + 1, 0);
      const std::uint64_t hmm = h(m - 1, m - 1);
      for (std::size_t d = 0; d < prev.size(); ++d) {
        cur[d + 1] = (cur[d + 1] + prev[d]) % p;
        cur[d] = (cur[d] + p - mul_mod(hmm, prev[d], p)) % p;
      }
      std::uint64_t t = 1;
      for (std::size_t i = m - 1; i-- > 0;) {
        t = mul_mod(t, h(i + 1, i), p);
        if (t == 0) break;
        const std::uint64_t f = mul_mod(t, h(i, m - 1), p);
        if (f == 0) continue;
        const auto& q = polys[i];
        for (std::size_t d = 0; d < q.size(); ++d) cur[d] = (cur[d] + p - mul_mod(f, q[d], p)) % p;
      }
      polys[m] = std::move(cur);
    }
    return polys[n];
  }

 private:
  std::size_t r_, c_;
  std::uint64_t ell_;
  std::vector<std::uint64_t> a_;
};

/// Distinct roots in F_ell of a polynomial (ascending coefficients) that
/// splits into linear factors, found by evaluation and deflation.
inline std::vector<std::uint64_t> roots_mod(std::vector<std::uint64_t> poly, std::uint64_t ell) {
  std::vector<std::uint64_t> roots;
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  for (std::uint64_t x = 0; x < ell && poly.size() > 1; ++x) {
    bool found = false;
    while (poly.size() > 1) {
      // synthetic division by (X - x)
      std::vector<std::uint64_t> q(poly.size() - 1);
      std::uint64_t acc = 0;
      for (std::size_t d = poly.size(); d-- > 0;) {
        acc = (mul_mod(acc, x, ell) + poly[d]) % ell;
        if (d > 0) q[d - 1] = acc;
      }
      if (acc != 0) break;
      poly = std::move(q);
      found = true;
    }
    if (found) roots.push_back(x);
  }
  if (poly.size() > 1) throw InternalError("roots_mod: polynomial does not split over F_ell");
  return roots;
}

}  // namespace pgzero
