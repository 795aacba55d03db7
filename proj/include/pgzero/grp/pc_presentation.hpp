#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgzero/errors.hpp"

namespace pgzero {

using ExponentVector = std::vector<std::uint32_t>;

/// Power-commutator presentation on generators g_0..g_{n-1} (0-based here;
/// the file format is 1-based). Relations:
///   g_i^{r_i} = powers[i]
///   [g_j, g_i] = g_j^{-1} g_i^{-1} g_j g_i = commutators[{j, i}]   (j > i)
/// Omitted relations are trivial. Every right-hand side may only involve
/// generators with index greater than i.
struct PcPresentation {
  std::uint64_t prime = 0;
  std::size_t ngens = 0;
  std::vector<std::uint32_t> rel_orders;
  std::map<std::size_t, ExponentVector> powers;
  std::map<std::pair<std::size_t, std::size_t>, ExponentVector> commutators;
  std::string label;

  bool operator==(const PcPresentation&) const = default;
};

/// Structural validation; throws InputError naming the first offending field
/// (in the 1-based file notation).
inline void validate(const PcPresentation& p) {
  if (p.rel_orders.size() != p.ngens)
    throw InputError("rel_orders: length " + std::to_string(p.rel_orders.size()) +
                     " does not match ngens " + std::to_string(p.ngens));
  for (std::size_t i = 0; i < p.ngens; ++i)
    if (p.rel_orders[i] < 2)
      throw InputError("rel_orders/" + std::to_string(i + 1) + ": relative order must be >= 2");
  auto check_word = [&](const ExponentVector& w, std::size_t lowest, const std::string& where) {
    if (w.size() != p.ngens)
      throw InputError(where + ": vector length " + std::to_string(w.size()) +
                       " does not match ngens " + std::to_string(p.ngens));
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] >= p.rel_orders[k])
        throw InputError(where + "/" + std::to_string(k + 1) + ": exponent out of range");
      if (k <= lowest && w[k] != 0)
        throw InputError(where + "/" + std::to_string(k + 1) +
                         ": relation may only involve generators after " +
                         std::to_string(lowest + 1));
    }
  };
  for (const auto& [i, w] : p.powers) {
    if (i >= p.ngens) throw InputError("powers/" + std::to_string(i + 1) + ": no such generator");
    check_word(w, i, "powers/" + std::to_string(i + 1));
  }
  for (const auto& [key, w] : p.commutators) {
    auto [j, i] = key;
    const std::string where = "commutators/" + std::to_string(j + 1) + "," + std::to_string(i + 1);
    if (j <= i) throw InputError(where + ": requires j > i");
    if (j >= p.ngens) throw InputError(where + ": no such generator");
    check_word(w, i, where);
  }
}

/// Multiplication in normal form by collection from the left: the word to be
/// multiplied is consumed letter by letter onto an already collected prefix.
class Collector {
 public:
  static constexpr std::uint64_t kDefaultBudget = 10'000'000;

  explicit Collector(PcPresentation pres, std::uint64_t budget = kDefaultBudget)
      : pres_(std::move(pres)), budget_(budget) {
    validate(pres_);
    const std::size_t n = pres_.ngens;
    power_letters_.resize(n);
    conj_letters_.assign(n, std::vector<std::vector<std::uint32_t>>(n));
    for (const auto& [i, w] : pres_.powers) power_letters_[i] = letters(w);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        // g_j^{g_i} = g_j [g_j, g_i]
        std::vector<std::uint32_t> w{static_cast<std::uint32_t>(j)};
        auto it = pres_.commutators.find({j, i});
        if (it != pres_.commutators.end()) {
          auto tail = letters(it->second);
          w.insert(w.end(), tail.begin(), tail.end());
        }
        conj_letters_[j][i] = std::move(w);
      }
  }

  const PcPresentation& presentation() const { return pres_; }
  std::size_t ngens() const { return pres_.ngens; }

  ExponentVector identity() const { return ExponentVector(pres_.ngens, 0); }

  ExponentVector generator(std::size_t i, std::uint32_t power = 1) const {
    ExponentVector v = identity();
    v[i] = power;
    return v;
  }

  /// a * b with both in normal form.
  ExponentVector multiply(const ExponentVector& a, const ExponentVector& b) const {
    ExponentVector v = a;
    std::vector<std::uint32_t> stack;
    auto word = letters(b);
    stack.assign(word.rbegin(), word.rend());
    run(v, stack);
    return v;
  }

  /// Collects an arbitrary word of generator letters.
  ExponentVector collect(const std::vector<std::uint32_t>& word) const {
    ExponentVector v = identity();
    std::vector<std::uint32_t> stack(word.rbegin(), word.rend());
    run(v, stack);
    return v;
  }

  /// The normal-form word g_0^{v_0} ... g_{n-1}^{v_{n-1}} as letters.
  static std::vector<std::uint32_t> letters(const ExponentVector& v) {
    std::vector<std::uint32_t> out;
    for (std::size_t k = 0; k < v.size(); ++k)
      for (std::uint32_t c = 0; c < v[k]; ++c) out.push_back(static_cast<std::uint32_t>(k));
    return out;
  }

  /// Runs the standard consistency tests for power-commutator presentations.
  /// Returns a description of the first failing test, or nullopt.
  std::optional<std::string> find_inconsistency() const {
    const std::size_t n = pres_.ngens;
    auto g = [&](std::size_t i, std::uint32_t e = 1) { return generator(i, e); };
    auto pw = [&](std::size_t i) {
      auto it = pres_.powers.find(i);
      return it == pres_.powers.end() ? identity() : it->second;
    };
    auto mul = [&](const ExponentVector& a, const ExponentVector& b) { return multiply(a, b); };
    auto name = [](std::size_t i) { return "g" + std::to_string(i + 1); };
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (mul(mul(g(k), g(j)), g(i)) != mul(g(k), mul(g(j), g(i))))
            return "(" + name(k) + name(j) + ")" + name(i) + " != " + name(k) + "(" + name(j) +
                   name(i) + ")";
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        const auto rj = pres_.rel_orders[j];
        const auto ri = pres_.rel_orders[i];
        if (mul(pw(j), g(i)) != mul(g(j, rj - 1), mul(g(j), g(i))))
          return "(" + name(j) + "^r)" + name(i) + " inconsistent";
        if (mul(g(j), pw(i)) != mul(mul(g(j), g(i)), g(i, ri - 1)))
          return name(j) + "(" + name(i) + "^r) inconsistent";
      }
    for (std::size_t i = 0; i < n; ++i)
      if (mul(pw(i), g(i)) != mul(g(i), pw(i))) return "(" + name(i) + "^r)" + name(i) + " inconsistent";
    return std::nullopt;
  }

 private:
  void run(ExponentVector& v, std::vector<std::uint32_t>& stack) const {
    const std::size_t n = pres_.ngens;
    std::uint64_t steps = 0;
    std::vector<std::uint32_t> tail;
    while (!stack.empty()) {
      if (++steps > budget_)
        throw InputError("collection exceeded step budget of " + std::to_string(budget_));
      const std::uint32_t x = stack.back();
      stack.pop_back();
      bool tail_zero = true;
      for (std::size_t k = x + 1; k < n; ++k)
        if (v[k] != 0) {
          tail_zero = false;
          break;
        }
      if (tail_zero) {
        if (++v[x] == pres_.rel_orders[x]) {
          v[x] = 0;
          const auto& w = power_letters_[x];
          stack.insert(stack.end(), w.rbegin(), w.rend());
        }
        continue;
      }
      // prefix * tail * g_x = prefix * g_x * tail^{g_x}
      tail.assign(v.begin() + x + 1, v.end());
      std::fill(v.begin() + x + 1, v.end(), 0u);
      for (std::size_t k = n; k-- > x + 1;) {
        const auto& w = conj_letters_[k][x];
        for (std::uint32_t c = 0; c < tail[k - x - 1]; ++c) stack.insert(stack.end(), w.rbegin(), w.rend());
      }
      stack.push_back(x);
    }
  }

  PcPresentation pres_;
  std::uint64_t budget_;
  std::vector<std::vector<std::uint32_t>> power_letters_;
  std::vector<std::vector<std::vector<std::uint32_t>>> conj_letters_;
};

}  // namespace pgzero
