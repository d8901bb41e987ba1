#ifndef SSE_FIELD_HPP
#define SSE_FIELD_HPP

#include <cstdint>

namespace sse {

/// Arithmetic in GF(q) for a prime q < 2^31. Elements are reduced residues.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return q_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % q_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(long long v) const {
    long long r = v % static_cast<long long>(q_);
    return r < 0 ? r + q_ : r;
  }

  bool operator==(const PrimeField& o) const { return q_ == o.q_; }

  static bool is_prime(std::uint64_t n);
  /// Smallest prime strictly greater than n.
  static std::uint64_t next_prime(std::uint64_t n);

 private:
  std::uint64_t q_;
};

}  // namespace sse

#endif
