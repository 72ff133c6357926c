#pragma once
// Dense F2 vectors and matrices. Sizes here are desk-scale (a few thousand
// columns at most), so word-packed dense storage beats anything sparse.

#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqdsim {

class Bitvec {
 public:
  Bitvec() = default;
  explicit Bitvec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  Bitvec& operator^=(const Bitvec& o) {
    if (o.n_ != n_) throw std::invalid_argument("Bitvec xor: size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend Bitvec operator^(Bitvec a, const Bitvec& b) { a ^= b; return a; }

  bool operator==(const Bitvec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitvec& o) const { return !(*this == o); }
  bool operator<(const Bitvec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
  }

  bool any() const {
    for (uint64_t w : w_) if (w) return true;
    return false;
  }
  std::size_t popcount() const {
    std::size_t c = 0;
    for (uint64_t w : w_) c += std::size_t(__builtin_popcountll(w));
    return c;
  }
  // parity of <a,b>
  bool dot(const Bitvec& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Bitvec dot: size mismatch");
    uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= (w_[i] & o.w_[i]);
    return __builtin_popcountll(acc) & 1;
  }
  int lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::size_t(__builtin_ctzll(w_[i])));
    return -1;
  }
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) out.push_back(i);
    return out;
  }
  std::size_t hash() const {
    std::size_t h = n_;
    for (uint64_t w : w_) h ^= std::size_t(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
  std::string str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitvecHash {
  std::size_t operator()(const Bitvec& b) const { return b.hash(); }
};

// Row-major dense matrix over F2.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols) {
    rows_.assign(rows, Bitvec(cols));
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  Bitvec& row(std::size_t r) { return rows_[r]; }
  const Bitvec& row(std::size_t r) const { return rows_[r]; }
  void add_row(const Bitvec& v) {
    if (v.size() != cols_) throw std::invalid_argument("F2Matrix add_row: size");
    rows_.push_back(v);
  }

  Bitvec apply(const Bitvec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("F2Matrix apply: size");
    Bitvec y(rows());
    for (std::size_t r = 0; r < rows(); ++r) y.set(r, rows_[r].dot(x));
    return y;
  }

  F2Matrix transpose() const {
    F2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  // Gaussian elimination to row echelon form; returns rank. Column order is
  // left-to-right pivoting. `self` is modified.
  std::size_t rref() {
    std::size_t r = 0;
    pivots_.clear();
    for (std::size_t c = 0; c < cols_ && r < rows(); ++c) {
      std::size_t p = r;
      while (p < rows() && !rows_[p].get(c)) ++p;
      if (p == rows()) continue;
      std::swap(rows_[p], rows_[r]);
      for (std::size_t i = 0; i < rows(); ++i)
        if (i != r && rows_[i].get(c)) rows_[i] ^= rows_[r];
      pivots_.push_back(c);
      ++r;
    }
    return r;
  }
  std::size_t rank() const {
    F2Matrix tmp = *this;
    return tmp.rref();
  }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Basis of the kernel {x : Ax = 0}.
  std::vector<Bitvec> kernel() const {
    F2Matrix a = *this;
    a.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : a.pivots_) is_pivot[c] = true;
    std::vector<Bitvec> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      Bitvec v(cols_);
      v.set(c, true);
      for (std::size_t r = 0; r < a.pivots_.size(); ++r)
        if (a.rows_[r].get(c)) v.set(a.pivots_[r], true);
      basis.push_back(v);
    }
    return basis;
  }

  // Solve Ax = b; returns false if inconsistent.
  bool solve(const Bitvec& b, Bitvec& x) const {
    if (b.size() != rows()) throw std::invalid_argument("F2 solve: size");
    F2Matrix aug(rows(), cols_ + 1);
    for (std::size_t r = 0; r < rows(); ++r) {
      aug.rows_[r] = Bitvec(cols_ + 1);
      for (std::size_t c = 0; c < cols_; ++c) aug.rows_[r].set(c, get(r, c));
      aug.rows_[r].set(cols_, b.get(r));
    }
    aug.rref();
    x = Bitvec(cols_);
    for (std::size_t r = 0; r < aug.pivots_.size(); ++r) {
      std::size_t c = aug.pivots_[r];
      if (c == cols_) return false;  // pivot in augmented column
      x.set(c, aug.rows_[r].get(cols_));
    }
    return true;
  }

  // Does v lie in the row space?
  bool in_row_space(const Bitvec& v) const {
    F2Matrix aug = *this;
    std::size_t r0 = aug.rref();
    aug.add_row(v);
    return aug.rref() == r0;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Bitvec> rows_;
  std::vector<std::size_t> pivots_;
};

// Incremental row-space tracker: add vectors, query rank / membership /
// reduction. Used for stabilizer rank bookkeeping and homology quotients.
class F2Span {
 public:
  explicit F2Span(std::size_t cols) : cols_(cols) {}
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduce v against the current basis; result has zeros at all pivot slots.
  Bitvec reduce(Bitvec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v.get(pivot_[i])) v ^= rows_[i];
    return v;
  }
  bool contains(const Bitvec& v) const { return !reduce(v).any(); }
  // Returns true if v enlarged the span.
  bool add(Bitvec v) {
    v = reduce(v);
    int p = v.lowest_set();
    if (p < 0) return false;
    rows_.push_back(v);
    pivot_.push_back(std::size_t(p));
    return true;
  }

 private:
  std::size_t cols_;
  std::vector<Bitvec> rows_;
  std::vector<std::size_t> pivot_;
};

}  // namespace tqdsim
