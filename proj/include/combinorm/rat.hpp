#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace combinorm {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d);
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "p/q" or "-p/q". Throws InvalidArgument on malformed input
  /// or a zero denominator.
  static Rat parse(std::string_view text);

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Rat pow(const Rat& base, unsigned exponent);

using DensePoint = std::vector<Rat>;

/// Finitely supported vector indexed by vertex ids. Zero entries are never
/// stored.
class RatVector {
 public:
  RatVector() = default;
  RatVector(std::initializer_list<std::pair<const int, Rat>> entries);

  static RatVector from_dense(const std::vector<int>& ids, const DensePoint& values);

  Rat get(int id) const;
  void set(int id, const Rat& value);

  std::vector<int> support() const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  DensePoint to_dense(const std::vector<int>& ids) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const RatVector&, const RatVector&) = default;
  friend auto operator<=>(const RatVector& a, const RatVector& b) { return a.entries_ <=> b.entries_; }

 private:
  std::map<int, Rat> entries_;
};

/// Dense rectangular matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(std::vector<std::vector<Rat>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows() == cols_; }

  Rat& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const std::vector<Rat>& row(std::size_t r) const { return rows_[r]; }
  const std::vector<std::vector<Rat>>& data() const { return rows_; }

  static RatMatrix identity(std::size_t n);

  /// Square matrix whose i-th row is `first_row` cyclically shifted right by i.
  static RatMatrix circulant(const std::vector<Rat>& first_row);

 private:
  std::vector<std::vector<Rat>> rows_;
  std::size_t cols_ = 0;
};

Rat dot(const DensePoint& a, const DensePoint& b);

std::string to_string(const DensePoint& p);

}  // namespace combinorm
