#include "kfc/gf2.hpp"

#include <bit>
#include <cassert>

namespace kfc::gf2 {

bool BitVec::none() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVec::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> BitVec::highest() const noexcept {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) noexcept {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool EchelonBasis::insert(BitVec v) {
  assert(v.size() == dim_);
  while (auto top = v.highest()) {
    const long row = pivot_row_[*top];
    if (row < 0) {
      pivot_row_[*top] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(v));
      return true;
    }
    v ^= rows_[static_cast<std::size_t>(row)];
  }
  return false;
}

BitVec EchelonBasis::reduce(BitVec v) const {
  assert(v.size() == dim_);
  auto top = v.highest();
  if (!top) return v;
  // Rows only touch bits at or below their pivot, so one descending sweep
  // clears every pivot position.
  for (std::size_t bit = *top + 1; bit-- > 0;) {
    if (!v.test(bit)) continue;
    const long row = pivot_row_[bit];
    if (row >= 0) v ^= rows_[static_cast<std::size_t>(row)];
  }
  return v;
}

bool EchelonBasis::contains(const BitVec& v) const {
  BitVec w = v;
  while (auto top = w.highest()) {
    const long row = pivot_row_[*top];
    if (row < 0) return false;
    w ^= rows_[static_cast<std::size_t>(row)];
  }
  return true;
}

std::vector<BitVec> kernel_basis(const std::vector<BitVec>& columns) {
  const std::size_t m = columns.size();
  if (m == 0) return {};
  const std::size_t n = columns.front().size();

  // Echelon rows paired with the combination of input columns producing them.
  std::vector<BitVec> rows;
  std::vector<BitVec> combos;
  std::vector<long> pivot_row(n, -1);
  std::vector<BitVec> kernel;

  for (std::size_t c = 0; c < m; ++c) {
    BitVec v = columns[c];
    BitVec combo(m);
    combo.set(c);
    bool inserted = false;
    while (auto top = v.highest()) {
      const long row = pivot_row[*top];
      if (row < 0) {
        pivot_row[*top] = static_cast<long>(rows.size());
        rows.push_back(std::move(v));
        combos.push_back(std::move(combo));
        inserted = true;
        break;
      }
      v ^= rows[static_cast<std::size_t>(row)];
      combo ^= combos[static_cast<std::size_t>(row)];
    }
    if (!inserted) kernel.push_back(std::move(combo));
  }
  return kernel;
}

std::size_t rank_of(const std::vector<BitVec>& vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().size());
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace kfc::gf2
