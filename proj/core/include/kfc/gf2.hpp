#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace kfc::gf2 {

/// Fixed-length vector over F_2, packed 64 bits per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  std::size_t count() const noexcept;
  /// Index of the highest set bit, or nullopt when zero.
  std::optional<std::size_t> highest() const noexcept;
  std::vector<std::size_t> ones() const;

  BitVec& operator^=(const BitVec& other) noexcept;
  friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-echelon basis of a subspace of F_2^n. Each stored row has a distinct
/// pivot, its highest set bit.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension = 0) : dim_(dimension), pivot_row_(dimension, -1) {}

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<BitVec>& rows() const noexcept { return rows_; }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(BitVec v);
  /// Canonical coset representative of v modulo the span: every pivot bit is
  /// cleared, and no bit above v's highest bit is introduced.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const;

 private:
  std::size_t dim_;
  std::vector<BitVec> rows_;
  std::vector<long> pivot_row_;
};

/// Basis of { lambda in F_2^m : sum_i lambda_i * columns[i] == 0 }, where all
/// columns have the same length. Vectors in the result have length m.
std::vector<BitVec> kernel_basis(const std::vector<BitVec>& columns);

/// Rank of the span of the given vectors.
std::size_t rank_of(const std::vector<BitVec>& vectors);

}  // namespace kfc::gf2
