#include "replika/linalg.hpp"

#include <algorithm>
#include <utility>

#include "replika/errors.hpp"

namespace replika {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InvalidArgument("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Entry Prime::pow(Entry a, std::uint64_t e) const {
  Entry r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Entry Prime::inv(Entry a) const {
  if (a % p_ == 0) throw InvalidArgument("division by zero in F_p");
  return pow(a, p_ - 2);
}

Entry Prime::reduce(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Entry>(r);
}

long long Prime::lift(Entry a) const {
  return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
}

FpMatrix::FpMatrix(Prime p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix shape");
}

FpMatrix::FpMatrix(Prime p, int rows, int cols, std::vector<Entry> entries)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0 || data_.size() != static_cast<std::size_t>(rows) * cols)
    throw ShapeMismatch("entry count does not match shape");
  for (auto& e : data_) e %= p.value();
}

FpMatrix FpMatrix::identity(Prime p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_ints(Prime p, const std::vector<std::vector<long long>>& rows, int cols) {
  int r = static_cast<int>(rows.size());
  int c = cols >= 0 ? cols : (r ? static_cast<int>(rows[0].size()) : 0);
  FpMatrix m(p, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ShapeMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = p.reduce(rows[i][j]);
  }
  return m;
}

FpMatrix FpMatrix::from_rows(Prime p, const std::vector<Row>& rows, int cols) {
  FpMatrix m(p, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw ShapeMismatch("ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Entry e) { return e == 0; });
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
  if (!(p_ == o.p_)) throw ShapeMismatch("matrix product over different primes");
  FpMatrix r(p_, rows_, o.cols_);
  const std::uint64_t p = p_.value();
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(o.cols_));
  for (int i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (!a) continue;
      auto orow = o.row(k);
      for (int j = 0; j < o.cols_; ++j) {
        acc[j] += a * orow[j];
        if (acc[j] >= (1ull << 62)) acc[j] %= p;
      }
    }
    for (int j = 0; j < o.cols_; ++j) r(i, j) = static_cast<Entry>(acc[j] % p);
  }
  return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  FpMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = p_.add(data_[i], o.data_[i]);
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
  FpMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = p_.sub(data_[i], o.data_[i]);
  return r;
}

FpMatrix FpMatrix::scaled(Entry s) const {
  FpMatrix r = *this;
  for (auto& e : r.data_) e = p_.mul(e, s);
  return r;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Row FpMatrix::apply(std::span<const Entry> x) const {
  if (static_cast<int>(x.size()) != rows_) throw ShapeMismatch("vector length mismatch");
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(cols_), 0);
  for (int k = 0; k < rows_; ++k) {
    if (!x[k]) continue;
    auto r = row(k);
    for (int j = 0; j < cols_; ++j) acc[j] = (acc[j] + static_cast<std::uint64_t>(x[k]) * r[j]) % p_.value();
  }
  return Row(acc.begin(), acc.end());
}

FpMatrix FpMatrix::select_rows(std::span<const int> idx) const {
  FpMatrix r(p_, static_cast<int>(idx.size()), cols_);
  for (int i = 0; i < r.rows_; ++i) std::copy_n(row(idx[i]).begin(), cols_, r.row(i).begin());
  return r;
}

FpMatrix FpMatrix::select_cols(std::span<const int> idx) const {
  FpMatrix r(p_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < r.cols_; ++j) r(i, j) = (*this)(i, idx[j]);
  return r;
}

void FpMatrix::paste(const FpMatrix& block, int r, int c) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw ShapeMismatch("paste out of range");
  for (int i = 0; i < block.rows_; ++i)
    std::copy_n(block.row(i).begin(), block.cols_, row(r + i).begin() + c);
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_) throw ShapeMismatch("hstack row mismatch");
  FpMatrix r(a.p_, a.rows_, a.cols_ + b.cols_);
  r.paste(a, 0, 0);
  r.paste(b, 0, a.cols_);
  return r;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.cols_) throw ShapeMismatch("vstack column mismatch");
  FpMatrix r(a.p_, a.rows_ + b.rows_, a.cols_);
  r.paste(a, 0, 0);
  r.paste(b, a.rows_, 0);
  return r;
}

RowEchelon row_reduce(const FpMatrix& m) {
  const Prime p = m.prime();
  FpMatrix r = m;
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < r.cols() && lead < r.rows(); ++c) {
    int sel = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (r(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != lead) std::swap_ranges(r.row(sel).begin(), r.row(sel).end(), r.row(lead).begin());
    Entry inv = p.inv(r(lead, c));
    for (auto& e : r.row(lead)) e = p.mul(e, inv);
    auto prow = r.row(lead);
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      Entry f = r(i, c);
      if (!f) continue;
      Entry nf = p.neg(f);
      auto dst = r.row(i);
      for (int j = c; j < r.cols(); ++j)
        if (prow[j]) dst[j] = p.add(dst[j], p.mul(nf, prow[j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

int rank(const FpMatrix& m) { return row_reduce(m).rank(); }

RowEchelon row_space(const FpMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<int> keep(e.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
  return {e.reduced.select_rows(keep), std::move(e.pivots)};
}

Row echelon_coordinates(const RowEchelon& basis, std::span<const Entry> x) {
  Row c(basis.pivots.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x[basis.pivots[i]];
  return c;
}

FpMatrix kernel_basis(const FpMatrix& m) {
  // v * m = 0  <=>  m^T * v^T = 0; read the null space off rref(m^T).
  const Prime p = m.prime();
  RowEchelon e = row_reduce(m.transpose());
  const int n = m.rows();
  std::vector<char> is_pivot(n, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix k(p, static_cast<int>(free_cols.size()), n);
  for (int i = 0; i < k.rows(); ++i) {
    int f = free_cols[i];
    k(i, f) = 1;
    for (int r = 0; r < e.rank(); ++r) k(i, e.pivots[r]) = p.neg(e.reduced(r, f));
  }
  return k;
}

std::optional<Row> solve_linear(const FpMatrix& a, std::span<const Entry> b) {
  if (static_cast<int>(b.size()) != a.cols()) throw ShapeMismatch("right-hand side length mismatch");
  // x * a = b  <=>  a^T x^T = b^T. Reduce the augmented system [a^T | b^T].
  const Prime p = a.prime();
  FpMatrix aug(p, a.cols(), a.rows() + 1);
  for (int i = 0; i < a.cols(); ++i) {
    for (int j = 0; j < a.rows(); ++j) aug(i, j) = a(j, i);
    aug(i, a.rows()) = b[i] % p.value();
  }
  RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.rows()) return std::nullopt;
  Row x(a.rows(), 0);
  for (int r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, a.rows());
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
  const int n = m.rows();
  RowEchelon e = row_reduce(FpMatrix::hstack(m, FpMatrix::identity(m.prime(), n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = n + i;
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  return e.reduced.select_rows(rows).select_cols(cols);
}

namespace {

using Poly = std::vector<Entry>;

Poly poly_mul_linear(Prime p, const Poly& a, Entry c) {
  // (x - c) * a
  Poly r(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i + 1] = p.add(r[i + 1], a[i]);
    r[i] = p.sub(r[i], p.mul(c, a[i]));
  }
  return r;
}

}  // namespace

std::vector<Entry> characteristic_polynomial(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("characteristic polynomial of non-square matrix");
  const Prime p = m.prime();
  const int n = m.rows();
  FpMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (int k = 0; k + 2 < n; ++k) {
    int sel = -1;
    for (int i = k + 1; i < n; ++i)
      if (h(i, k)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != k + 1) {
      std::swap_ranges(h.row(sel).begin(), h.row(sel).end(), h.row(k + 1).begin());
      for (int i = 0; i < n; ++i) std::swap(h(i, sel), h(i, k + 1));
    }
    Entry inv = p.inv(h(k + 1, k));
    for (int r = k + 2; r < n; ++r) {
      Entry t = p.mul(h(r, k), inv);
      if (!t) continue;
      for (int j = 0; j < n; ++j) h(r, j) = p.sub(h(r, j), p.mul(t, h(k + 1, j)));
      for (int i = 0; i < n; ++i) h(i, k + 1) = p.add(h(i, k + 1), p.mul(t, h(i, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> polys{Poly{1}};
  for (int k = 0; k < n; ++k) {
    Poly next = poly_mul_linear(p, polys[k], h(k, k));
    Entry prod = 1;
    for (int i = k - 1; i >= 0; --i) {
      prod = p.mul(prod, h(i + 1, i));
      Entry coef = p.mul(h(i, k), prod);
      if (!coef) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d)
        next[d] = p.sub(next[d], p.mul(coef, polys[i][d]));
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

Entry evaluate(Prime p, std::span<const Entry> poly, Entry x) {
  Entry r = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = p.add(p.mul(r, x), *it);
  return r;
}

std::vector<Entry> roots(Prime p, std::span<const Entry> poly) {
  std::vector<Entry> out;
  if (poly.size() <= 1) return out;
  for (Entry x = 0; x < p.value(); ++x)
    if (evaluate(p, poly, x) == 0) out.push_back(x);
  return out;
}

}  // namespace replika
