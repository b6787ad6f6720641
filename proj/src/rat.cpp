#include "combinorm/rat.hpp"

#include <cctype>
#include <sstream>

#include "combinorm/errors.hpp"

namespace combinorm {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw InvalidArgument("malformed rational: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long n, long d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  mpz_class n = parse_integer(text.substr(0, slash));
  std::string_view ds = text.substr(slash + 1);
  if (!ds.empty() && (ds.front() == '-' || ds.front() == '+')) {
    throw InvalidArgument("sign in denominator: '" + std::string(text) + "'");
  }
  return Rat(n, parse_integer(ds));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat pow(const Rat& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rat(n, d);
}

RatVector::RatVector(std::initializer_list<std::pair<const int, Rat>> entries) {
  for (const auto& [id, v] : entries) set(id, v);
}

RatVector RatVector::from_dense(const std::vector<int>& ids, const DensePoint& values) {
  if (ids.size() != values.size()) throw InvalidArgument("id/value length mismatch");
  RatVector out;
  for (std::size_t i = 0; i < ids.size(); ++i) out.set(ids[i], values[i]);
  return out;
}

Rat RatVector::get(int id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? Rat() : it->second;
}

void RatVector::set(int id, const Rat& value) {
  if (id < 0) throw InvalidArgument("vertex ids are non-negative");
  if (value.is_zero()) {
    entries_.erase(id);
  } else {
    entries_[id] = value;
  }
}

std::vector<int> RatVector::support() const {
  std::vector<int> s;
  s.reserve(entries_.size());
  for (const auto& [id, v] : entries_) s.push_back(id);
  return s;
}

DensePoint RatVector::to_dense(const std::vector<int>& ids) const {
  DensePoint out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(get(id));
  return out;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, std::vector<Rat>(cols)), cols_(cols) {}

RatMatrix::RatMatrix(std::vector<std::vector<Rat>> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw InvalidArgument("matrix rows have unequal length");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::circulant(const std::vector<Rat>& first_row) {
  const std::size_t n = first_row.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, (j + i) % n) = first_row[j];
  }
  return m;
}

Rat dot(const DensePoint& a, const DensePoint& b) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch in dot product");
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rat(acc);
}

std::string to_string(const DensePoint& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace combinorm
