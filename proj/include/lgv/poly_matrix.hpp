#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lgv/ideal_ops.hpp"

namespace lgv {

/// Dense matrix of polynomials over one ring.
template <CoefficientField F>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<F>(ring_)) {}

  static PolyMatrix identity(const RingPtr<F>& ring, std::size_t n) {
    return scalar(ring, n, Polynomial<F>::one(ring));
  }
  static PolyMatrix scalar(const RingPtr<F>& ring, std::size_t n, const Polynomial<F>& value) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }
  /// rows x cols matrix of fresh variables named `<prefix>_<row>_<col>` (1-based).
  static PolyMatrix variables(const RingPtr<F>& ring, const std::string& prefix, std::size_t rows,
                              std::size_t cols) {
    PolyMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = Polynomial<F>::variable(ring, prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    return m;
  }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Polynomial<F>& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const Polynomial<F>& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  const std::vector<Polynomial<F>>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.is_zero(); });
  }

  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw StructuralError("matrix block out of range");
    PolyMatrix m(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw StructuralError("matrix block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// [top; bottom]
  static PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw StructuralError("vstack: column mismatch");
    PolyMatrix m(top.ring(), top.rows() + bottom.rows(), top.cols());
    m.set_block(0, 0, top);
    m.set_block(top.rows(), 0, bottom);
    return m;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product: inner extents differ");
    PolyMatrix m(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        Polynomial<F> acc(a.ring_);
        for (std::size_t k = 0; k < a.cols_; ++k)
          if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
        m(i, j) = std::move(acc);
      }
    return m;
  }
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) { return combine(a, b, false); }
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return combine(a, b, true); }

  PolyMatrix times(const Polynomial<F>& c) const {
    PolyMatrix m(*this);
    for (auto& e : m.entries_) e = e * c;
    return m;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Same entries over another ring, matching variables by name.
  PolyMatrix embedded(const RingPtr<F>& target) const {
    PolyMatrix m(target, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = embed(entries_[i], target);
    return m;
  }

  /// Determinant by cofactor expansion (small matrices only).
  Polynomial<F> determinant() const {
    if (rows_ != cols_) throw StructuralError("determinant of a non-square matrix");
    std::vector<std::size_t> rs(rows_), cs(cols_);
    std::iota(rs.begin(), rs.end(), std::size_t{0});
    std::iota(cs.begin(), cs.end(), std::size_t{0});
    return minor_of(rs, cs);
  }

  /// All k x k minors, rows and columns chosen in lexicographic order. The
  /// 0 x 0 minor is 1; for k beyond the extents the list is empty.
  std::vector<Polynomial<F>> minors(std::size_t k) const {
    if (k == 0) return {Polynomial<F>::one(ring_)};
    if (k > rows_ || k > cols_) return {};
    std::vector<Polynomial<F>> out;
    for (const auto& rs : subsets(rows_, k))
      for (const auto& cs : subsets(cols_, k)) out.push_back(minor_of(rs, cs));
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    }
    return s + "]";
  }

 private:
  static PolyMatrix combine(const PolyMatrix& a, const PolyMatrix& b, bool subtract) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix sum: extents differ");
    PolyMatrix m(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      m.entries_[i] = subtract ? a.entries_[i] - b.entries_[i] : a.entries_[i] + b.entries_[i];
    return m;
  }

  static std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    for (;;) {
      out.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  }

  Polynomial<F> minor_of(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    if (rs.empty()) return Polynomial<F>::one(ring_);
    if (rs.size() == 1) return (*this)(rs[0], cs[0]);
    Polynomial<F> det(ring_);
    std::vector<std::size_t> sub_rows(rs.begin() + 1, rs.end());
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const auto& a = (*this)(rs[0], cs[j]);
      if (a.is_zero()) continue;
      std::vector<std::size_t> sub_cols;
      for (std::size_t c = 0; c < cs.size(); ++c)
        if (c != j) sub_cols.push_back(cs[c]);
      auto term = a * minor_of(sub_rows, sub_cols);
      det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
  }

  RingPtr<F> ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial<F>> entries_;
};

}  // namespace lgv
