#pragma once

// Dense exact linear algebra over a prime field F_p.
//
// Vectors are rows; matrices act on the right (x -> x * M), which matches the
// right-module convention used everywhere else in the library.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace replika {

using Entry = std::uint32_t;
using Row = std::vector<Entry>;

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kSecondPrime = 101;

class Prime {
 public:
  // Throws InvalidArgument unless p is a prime below 2^31.
  explicit Prime(std::uint32_t p);
  std::uint32_t value() const { return p_; }

  Entry add(Entry a, Entry b) const {
    Entry s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Entry sub(Entry a, Entry b) const { return a >= b ? a - b : a + p_ - b; }
  Entry neg(Entry a) const { return a == 0 ? 0 : p_ - a; }
  Entry mul(Entry a, Entry b) const {
    return static_cast<Entry>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Entry inv(Entry a) const;
  Entry pow(Entry a, std::uint64_t e) const;
  // Reduces a signed integer into [0, p).
  Entry reduce(long long v) const;
  // Symmetric lift into (-p/2, p/2], handy for printing small coefficients.
  long long lift(Entry a) const;

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Scalar with its modulus attached.
class Fp {
 public:
  Fp(Entry v, Prime p) : v_(p.reduce(v)), p_(p) {}
  Entry value() const { return v_; }
  Prime prime() const { return p_; }

  Fp operator+(const Fp& o) const { return {p_.add(v_, o.v_), p_}; }
  Fp operator-(const Fp& o) const { return {p_.sub(v_, o.v_), p_}; }
  Fp operator*(const Fp& o) const { return {p_.mul(v_, o.v_), p_}; }
  Fp operator-() const { return {p_.neg(v_), p_}; }
  Fp inverse() const { return {p_.inv(v_), p_}; }
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

 private:
  Entry v_;
  Prime p_;
};

class FpMatrix {
 public:
  FpMatrix(Prime p, int rows, int cols);
  FpMatrix(Prime p, int rows, int cols, std::vector<Entry> entries);
  static FpMatrix identity(Prime p, int n);
  // Builds from signed integers, reducing mod p.
  static FpMatrix from_ints(Prime p, const std::vector<std::vector<long long>>& rows, int cols = -1);
  static FpMatrix from_rows(Prime p, const std::vector<Row>& rows, int cols);

  Prime prime() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Entry operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Entry& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const Entry> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<Entry> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<Entry>& entries() const { return data_; }

  bool is_zero() const;
  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(Entry s) const;
  bool operator==(const FpMatrix& o) const;

  // Row vector times matrix.
  Row apply(std::span<const Entry> x) const;
  FpMatrix select_rows(std::span<const int> idx) const;
  FpMatrix select_cols(std::span<const int> idx) const;
  // Copies `block` into this matrix with its top-left corner at (r, c).
  void paste(const FpMatrix& block, int r, int c);

  static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
  static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

 private:
  Prime p_;
  int rows_;
  int cols_;
  std::vector<Entry> data_;
};

struct RowEchelon {
  FpMatrix reduced;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Reduced row-echelon form. The nonzero rows of `reduced` come first.
RowEchelon row_reduce(const FpMatrix& m);
int rank(const FpMatrix& m);

// Rows spanning the left kernel {v : v * m = 0}; rows are independent.
FpMatrix kernel_basis(const FpMatrix& m);

// Some x with x * a = b, or nullopt if inconsistent.
std::optional<Row> solve_linear(const FpMatrix& a, std::span<const Entry> b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

// Basis of the row space in reduced echelon form (zero rows dropped).
RowEchelon row_space(const FpMatrix& m);

// Coordinates of x in a basis given in reduced echelon form; x must lie in
// its span. The coordinates are simply the entries of x at the pivots.
Row echelon_coordinates(const RowEchelon& basis, std::span<const Entry> x);

// Coefficients c_0..c_n of the monic characteristic polynomial det(xI - m).
std::vector<Entry> characteristic_polynomial(const FpMatrix& m);
Entry evaluate(Prime p, std::span<const Entry> poly, Entry x);
// All roots in F_p, ascending. Exhaustive evaluation; fine for desk-scale p.
std::vector<Entry> roots(Prime p, std::span<const Entry> poly);

}  // namespace replika
