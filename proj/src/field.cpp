#include "sse/field.hpp"

#include <stdexcept>

namespace sse {

PrimeField::PrimeField(std::uint64_t modulus) : q_(modulus) {
  if (modulus < 2 || modulus >= (1ull << 31) || !is_prime(modulus)) {
    throw std::invalid_argument("field modulus must be a prime below 2^31");
  }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % q_;
  a %= q_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= q_;
  if (a == 0) throw std::invalid_argument("no inverse of zero");
  return pow(a, q_ - 2);
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t PrimeField::next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

}  // namespace sse
