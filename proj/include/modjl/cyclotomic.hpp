#pragma once

// Exact arithmetic in Z[zeta_n], zeta_n a primitive n-th root of unity.
//
// Elements are kept in canonical form: the coefficient vector of the residue
// modulo Phi_n(x) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.  Equality
// of canonical vectors is equality in the ring, which is what every verifier
// in this project ultimately relies on.  The ring precomputes x^t mod Phi_n
// for all t < n, so sums of roots of unity (the only way values ever arise
// here) reduce by table lookup.

#include <cstdint>
#include <span>
#include <vector>

namespace modjl {

class CyclotomicRing;

class CycInt {
 public:
  CycInt() = default;

  // n of the ambient ring (0 for a default-constructed element).
  std::int64_t modulus_order() const { return n_; }
  // canonical power-basis coefficients, length phi(n), constant term first
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool operator==(const CycInt&) const = default;

  bool is_zero() const;
  bool is_integer() const;          // lies in Z (only the constant term)
  std::int64_t integer_value() const;  // pre: is_integer()

 private:
  friend class CyclotomicRing;
  CycInt(std::int64_t n, std::vector<std::int64_t> c)
      : n_(n), c_(std::move(c)) {}
  std::int64_t n_ = 0;
  std::vector<std::int64_t> c_;
};

class CyclotomicRing {
 public:
  explicit CyclotomicRing(std::int64_t n);

  std::int64_t n() const { return n_; }
  std::int64_t degree() const { return deg_; }  // phi(n)
  // Phi_n coefficients, constant term first, length degree()+1, monic
  const std::vector<std::int64_t>& modulus() const { return phi_; }

  CycInt zero() const;
  CycInt one() const;
  CycInt from_int(std::int64_t v) const;
  CycInt zeta_pow(std::int64_t t) const;  // any t, reduced mod n

  // Reduce an arbitrary integer coefficient vector (any length) mod Phi_n.
  CycInt from_coeffs(std::span<const std::int64_t> coeffs) const;

  CycInt add(const CycInt& a, const CycInt& b) const;
  CycInt sub(const CycInt& a, const CycInt& b) const;
  CycInt neg(const CycInt& a) const;
  CycInt scale(const CycInt& a, std::int64_t s) const;
  CycInt mul(const CycInt& a, const CycInt& b) const;
  CycInt conj(const CycInt& a) const;  // zeta -> zeta^{-1}

  // sum_{i=0}^{d} zeta^{a*i + b*(d-i) + shift}; the building block for every
  // character value in the project.
  CycInt geometric(std::int64_t a, std::int64_t b, std::int64_t d,
                   std::int64_t shift) const;

  // Ring homomorphism Z[zeta] -> Z/ell determined by zeta -> root.
  // pre: ell = 1 (mod n) prime and root of exact multiplicative order n.
  std::int64_t eval_mod(const CycInt& a, std::int64_t ell,
                        std::int64_t root) const;

 private:
  void check(const CycInt& a) const;
  std::int64_t n_ = 0;
  std::int64_t deg_ = 0;
  std::vector<std::int64_t> phi_;
  std::vector<std::vector<std::int64_t>> rem_;  // x^t mod Phi_n, t in [0, n)
};

// Phi_n coefficients, constant term first, monic.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

}  // namespace modjl
