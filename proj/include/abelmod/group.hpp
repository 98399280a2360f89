#pragma once

#include <cstdint>
#include <cstring>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "abelmod/core/int_matrix.hpp"
#include "abelmod/core/rational_matrix.hpp"
#include "abelmod/rootdata.hpp"

namespace abelmod {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

struct ConjugacyClass {
  std::size_t representative = 0;  // element index
  std::size_t size = 0;
  std::size_t centralizer_order = 0;
};

/// A finite group of integer r x r matrices, fully materialized.
///
/// Elements are stored contiguously as int8 entries (Weyl group elements in a
/// simple-coroot basis have entries bounded by the highest-root coefficients)
/// and indexed through an open-addressing hash table. Element 0 is the
/// identity. Immutable after construction.
class MatrixGroup {
 public:
  /// Closure of `generators`; throws CapExceeded once more than `cap`
  /// elements have been produced.
  static MatrixGroup generate(const std::vector<IntMatrix>& generators, std::size_t cap = kDefaultEnumerationCap) {
    if (generators.empty()) throw InvalidInput("at least one generator is required");
    const std::size_t r = generators.front().rows();
    for (const auto& g : generators) {
      if (!g.is_square() || g.rows() != r) throw InvalidInput("generators must be square of equal size");
      auto det = determinant(g);
      if (det != 1 && det != -1) throw InvalidInput("generator is not invertible over Z");
    }
    MatrixGroup grp(r);
    grp.generators_ = generators;
    grp.insert(IntMatrix::identity(r), cap);
    std::vector<Cell> scratch(r * r);
    std::vector<Cell> gen_cells(generators.size() * r * r);
    for (std::size_t k = 0; k < generators.size(); ++k) grp.pack(generators[k], gen_cells.data() + k * r * r);
    for (std::size_t head = 0; head < grp.order(); ++head) {
      for (std::size_t k = 0; k < generators.size(); ++k) {
        grp.multiply_raw(grp.cells(head), gen_cells.data() + k * r * r, scratch.data());
        if (!grp.find(scratch.data())) grp.insert_raw(scratch.data(), cap);
      }
    }
    grp.compute_classes();
    return grp;
  }

  /// Validates that `elements` is closed under products and consists of
  /// unimodular matrices, then builds the group from it.
  static MatrixGroup from_elements(const std::vector<IntMatrix>& elements) {
    if (elements.empty()) throw InvalidInput("empty element list");
    try {
      auto grp = generate(elements, elements.size());
      if (grp.order() != elements.size()) throw InvalidInput("element list contains duplicates");
      return grp;
    } catch (const CapExceeded&) {
      throw InvalidInput("element list is not closed under multiplication");
    }
  }

  std::size_t rank() const { return rank_; }
  std::size_t order() const { return count_; }
  const std::vector<IntMatrix>& generators() const { return generators_; }
  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }

  IntMatrix element(std::size_t i) const {
    IntMatrix m(rank_, rank_);
    const Cell* c = cells(i);
    for (std::size_t a = 0; a < rank_; ++a)
      for (std::size_t b = 0; b < rank_; ++b) m(a, b) = c[a * rank_ + b];
    return m;
  }

  std::vector<IntMatrix> elements() const {
    std::vector<IntMatrix> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) out.push_back(element(i));
    return out;
  }

  std::optional<std::size_t> index_of(const IntMatrix& m) const {
    if (m.rows() != rank_ || m.cols() != rank_) return std::nullopt;
    std::vector<Cell> buf(rank_ * rank_);
    for (std::size_t a = 0; a < rank_ * rank_; ++a) {
      int64_t v = m.data()[a];
      if (v < kCellMin || v > kCellMax) return std::nullopt;
      buf[a] = static_cast<Cell>(v);
    }
    return find(buf.data());
  }

  bool contains(const IntMatrix& m) const { return index_of(m).has_value(); }

  std::size_t multiply(std::size_t a, std::size_t b) const {
    std::vector<Cell> buf(rank_ * rank_);
    multiply_raw(cells(a), cells(b), buf.data());
    auto idx = find(buf.data());
    if (!idx) throw InternalError("group is not closed under multiplication");
    return *idx;
  }

  bool commute(std::size_t a, std::size_t b) const {
    std::vector<Cell> ab(rank_ * rank_), ba(rank_ * rank_);
    multiply_raw(cells(a), cells(b), ab.data());
    multiply_raw(cells(b), cells(a), ba.data());
    return ab == ba;
  }

  /// Indices of all elements commuting with `element`.
  std::vector<std::size_t> centralizer(std::size_t element) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < count_; ++j)
      if (commute(element, j)) out.push_back(j);
    return out;
  }

  /// A small generating set of the centralizer of a class representative,
  /// chosen greedily.
  std::vector<IntMatrix> centralizer_generators(std::size_t class_index) const {
    const auto members = centralizer(classes_.at(class_index).representative);
    std::vector<std::size_t> gens;
    std::vector<char> in_sub(count_, 0);
    std::vector<std::size_t> sub{0};
    in_sub[0] = 1;
    for (auto h : members) {
      if (in_sub[h]) continue;
      gens.push_back(h);
      // re-close the subgroup generated so far
      for (std::size_t head = 0; head < sub.size(); ++head)
        for (auto g : gens) {
          auto p = multiply(sub[head], g);
          if (!in_sub[p]) {
            in_sub[p] = 1;
            sub.push_back(p);
          }
        }
    }
    std::vector<IntMatrix> out;
    for (auto g : gens) out.push_back(element(g));
    return out;
  }

  /// Multiplicative order of an element.
  std::size_t element_order(std::size_t i) const {
    std::size_t k = 1;
    for (std::size_t p = i; p != 0; p = multiply(p, i)) ++k;
    return k;
  }

 private:
  using Cell = int8_t;
  static constexpr int64_t kCellMin = std::numeric_limits<Cell>::min();
  static constexpr int64_t kCellMax = std::numeric_limits<Cell>::max();

  explicit MatrixGroup(std::size_t r) : rank_(r) { table_.assign(1024, kEmpty); }

  const Cell* cells(std::size_t i) const { return entries_.data() + i * rank_ * rank_; }

  void pack(const IntMatrix& m, Cell* out) const {
    for (std::size_t a = 0; a < rank_ * rank_; ++a) {
      int64_t v = m.data()[a];
      if (v < kCellMin || v > kCellMax) throw InvalidInput("matrix entry out of supported range for group storage");
      out[a] = static_cast<Cell>(v);
    }
  }

  void multiply_raw(const Cell* a, const Cell* b, Cell* out) const {
    const std::size_t r = rank_;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        int32_t acc = 0;
        for (std::size_t k = 0; k < r; ++k) acc += int32_t{a[i * r + k]} * int32_t{b[k * r + j]};
        if (acc < kCellMin || acc > kCellMax) throw CapExceeded("group element entry exceeds int8 storage");
        out[i * r + j] = static_cast<Cell>(acc);
      }
  }

  std::size_t hash_cells(const Cell* c) const {
    uint64_t h = 1469598103934665603ULL;
    for (std::size_t a = 0; a < rank_ * rank_; ++a) {
      h ^= static_cast<uint8_t>(c[a]);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  std::optional<std::size_t> find(const Cell* c) const {
    const std::size_t mask = table_.size() - 1;
    const std::size_t bytes = rank_ * rank_;
    for (std::size_t pos = hash_cells(c) & mask;; pos = (pos + 1) & mask) {
      uint32_t slot = table_[pos];
      if (slot == kEmpty) return std::nullopt;
      if (std::memcmp(cells(slot), c, bytes) == 0) return slot;
    }
  }

  void insert(const IntMatrix& m, std::size_t cap) {
    std::vector<Cell> buf(rank_ * rank_);
    pack(m, buf.data());
    insert_raw(buf.data(), cap);
  }

  void insert_raw(const Cell* c, std::size_t cap) {
    if (count_ >= cap)
      throw CapExceeded("group enumeration exceeded the cap of " + std::to_string(cap) + " elements");
    if (count_ >= std::numeric_limits<uint32_t>::max() - 1) throw CapExceeded("group too large to index");
    entries_.insert(entries_.end(), c, c + rank_ * rank_);
    ++count_;
    if (2 * count_ > table_.size()) rehash(table_.size() * 2);
    place(static_cast<uint32_t>(count_ - 1));
  }

  void place(uint32_t idx) {
    const std::size_t mask = table_.size() - 1;
    std::size_t pos = hash_cells(cells(idx)) & mask;
    while (table_[pos] != kEmpty) pos = (pos + 1) & mask;
    table_[pos] = idx;
  }

  void rehash(std::size_t new_size) {
    table_.assign(new_size, kEmpty);
    for (std::size_t i = 0; i + 1 < count_; ++i) place(static_cast<uint32_t>(i));
  }

  void compute_classes() {
    const std::size_t r = rank_;
    // inverse generators, for conjugation x -> s x s^{-1}
    std::vector<std::vector<Cell>> gens, gens_inv;
    for (const auto& g : generators_) {
      std::vector<Cell> a(r * r), b(r * r);
      pack(g, a.data());
      pack(unimodular_inverse(g), b.data());
      gens.push_back(std::move(a));
      gens_inv.push_back(std::move(b));
    }
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    class_of_.assign(count_, kUnset);
    std::vector<Cell> tmp(r * r), conj(r * r);
    std::vector<std::size_t> queue;
    for (std::size_t start = 0; start < count_; ++start) {
      if (class_of_[start] != kUnset) continue;
      const std::size_t cls = classes_.size();
      queue.assign(1, start);
      class_of_[start] = cls;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          multiply_raw(gens[k].data(), cells(queue[head]), tmp.data());
          multiply_raw(tmp.data(), gens_inv[k].data(), conj.data());
          auto idx = find(conj.data());
          if (!idx) throw InternalError("conjugate left the group");
          if (class_of_[*idx] == kUnset) {
            class_of_[*idx] = cls;
            queue.push_back(*idx);
          }
        }
      if (count_ % queue.size() != 0) throw InternalError("class size does not divide group order");
      classes_.push_back(ConjugacyClass{start, queue.size(), count_ / queue.size()});
    }
  }

  static constexpr uint32_t kEmpty = std::numeric_limits<uint32_t>::max();

  std::size_t rank_ = 0;
  std::size_t count_ = 0;
  std::vector<Cell> entries_;
  std::vector<uint32_t> table_;
  std::vector<IntMatrix> generators_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

using WeylGroup = MatrixGroup;

/// Full Weyl group of a root datum. Refuses (naming the expected order) when
/// the product-formula order exceeds `order_cap`; E_8 is refused by default.
inline WeylGroup enumerate_group(const RootDatum& rd, std::size_t order_cap = kDefaultEnumerationCap) {
  const BigInt expected = rd.weyl_order();
  if (expected > order_cap)
    throw CapExceeded("refusing to enumerate W(" + rd.label() + "): expected order " + expected.str() +
                      " exceeds the cap " + std::to_string(order_cap));
  auto grp = MatrixGroup::generate(rd.weyl_generators, order_cap);
  if (BigInt(grp.order()) != expected)
    throw InternalError("W(" + rd.label() + ") closed to " + std::to_string(grp.order()) + " elements, expected " +
                        expected.str());
  return grp;
}

}  // namespace abelmod
