#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised when an exact division expected by Kostant's theorem leaves a remainder.
struct IntegralityError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Generalized binomial coefficient C(u, k) = u(u-1)...(u-k+1)/k! for any integer u.
inline BigInt binomial(long long u, long long k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (long long j = 0; j < k; ++j) {
    num *= (u - j);
    num /= (j + 1);
  }
  return num;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

struct IntegerRing {
  using value_type = BigInt;
  static constexpr const char* kName = "integer";

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_big(const BigInt& v) const { return v; }
  value_type from_int(long long v) const { return v; }
  bool is_zero(const value_type& v) const { return v == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  std::string to_string(const value_type& a) const { return a.str(); }
  value_type parse(const std::string& s) const { return BigInt(s); }
  bool operator==(const IntegerRing&) const { return true; }
};

struct RationalField {
  using value_type = BigRational;
  static constexpr const char* kName = "rational";

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_big(const BigInt& v) const { return BigRational(v); }
  value_type from_int(long long v) const { return v; }
  bool is_zero(const value_type& v) const { return v == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  std::string to_string(const value_type& a) const { return a.str(); }
  value_type parse(const std::string& s) const { return BigRational(s); }
  bool operator==(const RationalField&) const { return true; }
};

/// GF(p) for a runtime prime p < 2^16, stored as canonical residues.
struct PrimeField {
  using value_type = std::uint32_t;
  static constexpr const char* kName = "gf";

  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (prime < 2 || prime >= (1u << 16)) throw std::invalid_argument("unsupported prime");
    for (std::uint32_t d = 2; d * d <= prime; ++d)
      if (prime % d == 0) throw std::invalid_argument("modulus is not prime");
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_big(const BigInt& v) const {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<value_type>(r);
  }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  bool is_zero(value_type v) const { return v == 0; }
  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type mul(value_type a, value_type b) const { return a * b % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("division by zero");
    value_type result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(const std::string& s) const { return from_big(BigInt(s)); }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// Pascal triangle in a ring, grown on demand.
template <class Ring>
class BinomialTable {
 public:
  using V = typename Ring::value_type;
  explicit BinomialTable(Ring ring = {}) : ring_(ring) {}

  V operator()(int n, int k) {
    if (k < 0 || k > n) return ring_.zero();
    while (static_cast<int>(rows_.size()) <= n) {
      const auto m = rows_.size();
      std::vector<V> row(m + 1, ring_.one());
      for (std::size_t j = 1; j < m; ++j) row[j] = ring_.add(rows_[m - 1][j - 1], rows_[m - 1][j]);
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  Ring ring_;
  std::vector<std::vector<V>> rows_;
};

}  // namespace hyperalg
