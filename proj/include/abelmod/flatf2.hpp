#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "abelmod/core/error.hpp"

namespace abelmod {

/// An element of H^1(T^n; Z/2) = (Z/2)^n, i.e. a flat real line bundle on T^n.
class F2Class {
 public:
  F2Class() = default;
  explicit F2Class(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) b &= 1;
  }

  /// Parses a bitstring such as "101"; bit i is the holonomy around circle i.
  static F2Class parse(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty F2 class");
    std::vector<uint8_t> bits;
    for (char c : text) {
      if (c != '0' && c != '1') throw InvalidInput("F2 class must be a bitstring: '" + text + "'");
      bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    return F2Class(std::move(bits));
  }

  static F2Class zero(std::size_t n) { return F2Class(std::vector<uint8_t>(n, 0)); }

  std::size_t size() const { return bits_.size(); }
  bool bit(std::size_t i) const { return bits_[i] != 0; }
  bool is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](uint8_t b) { return b == 0; });
  }

  std::string to_string() const {
    std::string s;
    for (auto b : bits_) s += static_cast<char>('0' + b);
    return s;
  }

  friend F2Class operator+(const F2Class& a, const F2Class& b) {
    if (a.size() != b.size()) throw InvalidInput("F2 classes of different lengths");
    std::vector<uint8_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.bits_[i] ^ b.bits_[i];
    return F2Class(std::move(out));
  }
  friend bool operator==(const F2Class&, const F2Class&) = default;
  friend auto operator<=>(const F2Class&, const F2Class&) = default;

 private:
  std::vector<uint8_t> bits_;
};

/// All 2^n classes of H^1(T^n; Z/2), in binary counting order.
inline std::vector<F2Class> all_f2_classes(std::size_t n) {
  if (n > 20) throw CapExceeded("2^" + std::to_string(n) + " classes exceeds 2^20");
  std::vector<F2Class> out;
  for (uint32_t code = 0; code < (1u << n); ++code) {
    std::vector<uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<uint8_t>((code >> (n - 1 - i)) & 1);
    out.emplace_back(std::move(bits));
  }
  return out;
}

/// Element of the cohomology ring H^*(T^n; Z/2), the exterior algebra on n
/// degree-one generators with e_i^2 = 0. Stored as the set of monomials with
/// coefficient 1, each a strictly increasing index tuple.
class ExteriorF2 {
 public:
  using Monomial = std::vector<std::size_t>;

  explicit ExteriorF2(std::size_t n = 0) : n_(n) {}

  static ExteriorF2 one(std::size_t n) {
    ExteriorF2 e(n);
    e.monomials_.insert(Monomial{});
    return e;
  }
  static ExteriorF2 from_class(const F2Class& a) {
    ExteriorF2 e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.bit(i)) e.monomials_.insert(Monomial{i});
    return e;
  }

  std::size_t generators() const { return n_; }
  bool is_zero() const { return monomials_.empty(); }
  const std::set<Monomial>& monomials() const { return monomials_; }

  ExteriorF2 degree_part(std::size_t k) const {
    ExteriorF2 e(n_);
    for (const auto& m : monomials_)
      if (m.size() == k) e.monomials_.insert(m);
    return e;
  }

  void toggle(const Monomial& m) {
    if (!monomials_.erase(m)) monomials_.insert(m);
  }

  friend ExteriorF2 operator+(ExteriorF2 a, const ExteriorF2& b) {
    for (const auto& m : b.monomials_) a.toggle(m);
    return a;
  }
  friend ExteriorF2 operator*(const ExteriorF2& a, const ExteriorF2& b) {
    ExteriorF2 out(std::max(a.n_, b.n_));
    for (const auto& ma : a.monomials_)
      for (const auto& mb : b.monomials_) {
        Monomial merged;
        std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
        if (merged.size() == ma.size() + mb.size()) out.toggle(merged);
      }
    return out;
  }
  friend bool operator==(const ExteriorF2&, const ExteriorF2&) = default;

  /// e.g. "1 + e1 + e1e2"; generators are 1-indexed.
  std::string to_string() const {
    if (monomials_.empty()) return "0";
    std::vector<Monomial> ordered(monomials_.begin(), monomials_.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Monomial& a, const Monomial& b) { return a.size() < b.size(); });
    std::string s;
    for (const auto& m : ordered) {
      if (!s.empty()) s += " + ";
      if (m.empty()) s += "1";
      for (auto i : m) s += "e" + std::to_string(i + 1);
    }
    return s;
  }

 private:
  std::size_t n_;
  std::set<Monomial> monomials_;
};

/// dim H^k(T^n; R_alpha) for the flat line bundle R_alpha: C(n, k) when alpha
/// is trivial and 0 otherwise (Kunneth over circles, H^*(S^1; nontrivial) = 0).
inline uint64_t line_bundle_cohomology(std::size_t n, std::size_t k, const F2Class& alpha) {
  if (alpha.size() != n) throw InvalidInput("class length does not match the torus dimension");
  if (k > n) throw InvalidInput("cohomological degree exceeds the torus dimension");
  if (!alpha.is_zero()) return 0;
  uint64_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

inline std::size_t common_length(const std::vector<F2Class>& classes) {
  if (classes.empty()) throw InvalidInput("empty list of classes");
  for (const auto& c : classes)
    if (c.size() != classes.front().size()) throw InvalidInput("F2 classes of different lengths");
  return classes.front().size();
}

/// Total Stiefel-Whitney class of the sum of the flat line bundles:
/// prod (1 + alpha).
inline ExteriorF2 total_sw_class(const std::vector<F2Class>& classes) {
  const std::size_t n = common_length(classes);
  ExteriorF2 w = ExteriorF2::one(n);
  for (const auto& a : classes) w = w * (ExteriorF2::one(n) + ExteriorF2::from_class(a));
  return w;
}

/// dim H^1(T^n; so(E)) for E the sum of the given flat line bundles:
/// so(E) splits into R_(a+b) over unordered pairs of summands.
inline uint64_t so_bundle_deformation_dim(const std::vector<F2Class>& classes) {
  const std::size_t n = common_length(classes);
  uint64_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) total += line_bundle_cohomology(n, 1, classes[i] + classes[j]);
  return total;
}

struct FlatBundleReport {
  std::vector<F2Class> classes;
  ExteriorF2 w1, w2;
  uint64_t deformation_dim = 0;
  bool spin() const { return w1.is_zero() && w2.is_zero(); }
  bool rigid() const { return deformation_dim == 0; }
};

inline FlatBundleReport analyze_flat_bundle(const std::vector<F2Class>& classes) {
  auto w = total_sw_class(classes);
  return FlatBundleReport{classes, w.degree_part(1), w.degree_part(2), so_bundle_deformation_dim(classes)};
}

/// The rank-8 bundle on T^3 that sums all eight flat real line bundles; its
/// holonomies are a commuting triple in SO(8) that is spin and rigid.
inline FlatBundleReport spin8_triple() { return analyze_flat_bundle(all_f2_classes(3)); }

}  // namespace abelmod
