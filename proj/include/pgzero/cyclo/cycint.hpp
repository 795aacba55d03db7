#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgzero/errors.hpp"
#include "pgzero/util/numeric.hpp"

namespace pgzero {

using Integer = boost::multiprecision::cpp_int;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("cyclotomic table: int64 overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("cyclotomic table: int64 overflow");
  return r;
}

using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Cached data for the e-th cyclotomic field.
struct Cyclotomic {
  unsigned e = 1;
  unsigned phi = 1;
  /// Phi_e, ascending coefficients, monic, length phi + 1.
  std::vector<std::int64_t> poly;
  /// monomial[t] = x^t mod Phi_e for 0 <= t < e.
  std::vector<SparseRow> monomial;
};

inline constexpr unsigned kMaxConductor = 1u << 16;

/// Exact division by a monic polynomial; throws if the remainder is nonzero.
inline std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InternalError("cyclotomic: bad division");
  std::vector<std::int64_t> q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] = checked_add(num[i - dd + j], -checked_mul(c, den[j]));
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (num[j] != 0) throw InternalError("cyclotomic: inexact division");
  return q;
}

class CyclotomicCache {
 public:
  static CyclotomicCache& instance() {
    static CyclotomicCache cache;
    return cache;
  }

  const Cyclotomic& get(unsigned e) {
    std::lock_guard lock(mutex_);
    return get_locked(e);
  }

 private:
  const Cyclotomic& get_locked(unsigned e) {
    if (e == 0) throw DomainError("cyclotomic: conductor 0");
    if (e > kMaxConductor) throw DomainError("cyclotomic: conductor " + std::to_string(e) + " exceeds supported range");
    auto it = cache_.find(e);
    if (it != cache_.end()) return *it->second;
    auto c = std::make_unique<Cyclotomic>();
    c->e = e;
    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
    std::vector<std::int64_t> p(e + 1, 0);
    p[0] = -1;
    p[e] = 1;
    for (unsigned d = 1; d < e; ++d)
      if (e % d == 0) p = divide_exact(std::move(p), get_locked(d).poly);
    c->poly = std::move(p);
    c->phi = static_cast<unsigned>(c->poly.size() - 1);
    const unsigned phi = c->phi;
    c->monomial.resize(e);
    for (unsigned t = 0; t < std::min(e, phi); ++t) c->monomial[t] = {{t, 1}};
    for (unsigned t = phi; t < e; ++t) {
      SparseRow shifted;
      std::int64_t lead = 0;
      for (auto [i, v] : c->monomial[t - 1]) {
        if (i + 1 == phi) lead = v;
        else shifted.emplace_back(i + 1, v);
      }
      SparseRow row;
      std::size_t a = 0;
      for (unsigned j = 0; j < phi; ++j) {
        std::int64_t v = 0;
        bool present = false;
        if (a < shifted.size() && shifted[a].first == j) {
          v = shifted[a++].second;
          present = true;
        }
        if (lead != 0 && c->poly[j] != 0) {
          v = checked_add(v, -checked_mul(lead, c->poly[j]));
          present = true;
        }
        if (present && v != 0) row.emplace_back(j, v);
      }
      c->monomial[t] = std::move(row);
    }
    auto [pos, _] = cache_.emplace(e, std::move(c));
    return *pos->second;
  }

  std::recursive_mutex mutex_;
  std::map<unsigned, std::unique_ptr<Cyclotomic>> cache_;
};

inline const Cyclotomic& cyclotomic(unsigned e) { return CyclotomicCache::instance().get(e); }

}  // namespace detail

/// Element of Z[zeta_e], stored as its residue modulo the e-th cyclotomic
/// polynomial: sum_{i < phi(e)} c_i zeta_e^i. The representation is unique
/// for a fixed conductor.
class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(unsigned conductor) : e_(conductor), c_(detail::cyclotomic(conductor).phi) {}

  static CycInt integer(unsigned e, const Integer& v) {
    CycInt r(e);
    r.c_[0] = v;
    return r;
  }

  /// zeta_e^k
  static CycInt root(unsigned e, std::uint64_t k) {
    CycInt r(e);
    r.add_monomial(k % e, Integer(1));
    return r;
  }

  /// sum_k m_k zeta_e^k reduced modulo Phi_e; m has length e.
  template <class Int>
  static CycInt from_root_multiplicities(unsigned e, std::span<const Int> m) {
    if (m.size() != e) throw DomainError("from_root_multiplicities: expected " + std::to_string(e) + " entries");
    CycInt r(e);
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] != 0) r.add_monomial(k, Integer(m[k]));
    return r;
  }
  template <class Int>
  static CycInt from_root_multiplicities(unsigned e, const std::vector<Int>& m) {
    return from_root_multiplicities(e, std::span<const Int>(m));
  }

  unsigned conductor() const { return e_; }
  const std::vector<Integer>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& v : c_) n += v != 0;
    return n;
  }

  std::optional<Integer> as_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return std::nullopt;
    return c_[0];
  }

  /// If the value is +-zeta_e^k, returns (negated, k) with the smallest such k.
  std::optional<std::pair<bool, unsigned>> as_root_of_unity() const {
    const auto& cy = detail::cyclotomic(e_);
    const std::size_t nz = nonzeros();
    if (nz == 0) return std::nullopt;
    for (unsigned k = 0; k < e_; ++k) {
      const auto& row = cy.monomial[k];
      if (row.size() != nz) continue;
      for (int sign : {1, -1}) {
        bool match = true;
        for (auto [i, v] : row)
          if (c_[i] != sign * v) {
            match = false;
            break;
          }
        if (match) return std::pair{sign < 0, k};
      }
    }
    return std::nullopt;
  }

  /// True iff the value is one of the 2e candidates +-zeta_e^k.
  bool is_root_of_unity() const { return as_root_of_unity().has_value(); }

  /// Galois automorphism zeta_e -> zeta_e^t.
  CycInt galois(std::uint64_t t) const {
    if (std::gcd(t % e_, std::uint64_t{e_}) != 1 && e_ != 1)
      throw DomainError("galois: exponent " + std::to_string(t) + " not coprime to conductor " + std::to_string(e_));
    CycInt r(e_);
    for (std::size_t s = 0; s < c_.size(); ++s)
      if (c_[s] != 0) r.add_monomial((s * (t % e_)) % e_, c_[s]);
    return r;
  }

  CycInt conj() const { return galois(e_ - 1 == 0 ? 1 : e_ - 1); }
  CycInt abs_square() const { return *this * conj(); }

  /// Same value in Z[zeta_E]; E must be a multiple of the conductor.
  CycInt embed(unsigned E) const {
    if (E == 0 || E % e_ != 0) throw DomainError("embed: target conductor must be a multiple of the conductor");
    if (E == e_) return *this;
    const unsigned step = E / e_;
    CycInt r(E);
    for (std::size_t s = 0; s < c_.size(); ++s)
      if (c_[s] != 0) r.add_monomial(s * step, c_[s]);
    return r;
  }

  CycInt operator-() const {
    CycInt r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    if (a.e_ != b.e_) return lift_pair(a, b, [](const CycInt& x, const CycInt& y) { return x + y; });
    CycInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }

  friend CycInt operator-(const CycInt& a, const CycInt& b) {
    if (a.e_ != b.e_) return lift_pair(a, b, [](const CycInt& x, const CycInt& y) { return x - y; });
    CycInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.e_ != b.e_) return lift_pair(a, b, [](const CycInt& x, const CycInt& y) { return x * y; });
    const std::size_t phi = a.c_.size();
    std::vector<Integer> buf(2 * phi - 1);
    for (std::size_t s = 0; s < phi; ++s) {
      if (a.c_[s] == 0) continue;
      for (std::size_t t = 0; t < phi; ++t)
        if (b.c_[t] != 0) buf[s + t] += a.c_[s] * b.c_[t];
    }
    CycInt r(a.e_);
    for (std::size_t u = 0; u < buf.size(); ++u)
      if (buf[u] != 0) r.add_monomial(u % a.e_, buf[u]);
    return r;
  }

  friend CycInt operator*(const Integer& k, const CycInt& a) {
    CycInt r = a;
    for (auto& v : r.c_) v *= k;
    return r;
  }

  CycInt& operator+=(const CycInt& b) { return *this = *this + b; }
  CycInt& operator-=(const CycInt& b) { return *this = *this - b; }
  CycInt& operator*=(const CycInt& b) { return *this = *this * b; }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    if (a.e_ == b.e_) return a.c_ == b.c_;
    const unsigned l = std::lcm(a.e_, b.e_);
    return a.embed(l).c_ == b.embed(l).c_;
  }

  /// Total order on (conductor, coefficient vector) for canonical sorting.
  friend int compare(const CycInt& a, const CycInt& b) {
    if (a.e_ != b.e_) return a.e_ < b.e_ ? -1 : 1;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    return 0;
  }

  /// Adds v * zeta_e^t for 0 <= t < e.
  void add_monomial(std::size_t t, const Integer& v) {
    const auto& cy = detail::cyclotomic(e_);
    for (auto [i, m] : cy.monomial[t]) c_[i] += v * m;
  }

 private:
  template <class Op>
  static CycInt lift_pair(const CycInt& a, const CycInt& b, Op op) {
    const unsigned l = std::lcm(a.e_, b.e_);
    return op(a.embed(l), b.embed(l));
  }

  unsigned e_;
  std::vector<Integer> c_;
};

/// Coefficients of Phi_e in ascending order.
inline std::vector<std::int64_t> cyclotomic_polynomial(unsigned e) { return detail::cyclotomic(e).poly; }

inline CycInt from_root_multiplicities(unsigned e, const std::vector<std::int64_t>& m) {
  return CycInt::from_root_multiplicities(e, m);
}
inline bool is_zero(const CycInt& a) { return a.is_zero(); }
inline bool is_root_of_unity(const CycInt& a) { return a.is_root_of_unity(); }
inline CycInt conj(const CycInt& a) { return a.conj(); }
inline CycInt galois(const CycInt& a, std::uint64_t t) { return a.galois(t); }
inline CycInt abs_square(const CycInt& a) { return a.abs_square(); }

}  // namespace pgzero
