#include <doctest.h>

#include <random>

#include "modjl/cyclotomic.hpp"
#include "modjl/modular.hpp"

using namespace modjl;

namespace {

// deterministic small RNG helper (avoids unspecified distribution behaviour)
std::int64_t next_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                            hi - lo + 1));
}

}  // namespace

TEST_CASE("cyclotomic polynomials match known values") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<std::int64_t>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(15) ==
        std::vector<std::int64_t>{1, -1, 0, 1, -1, 1, 0, -1, 1});
}

TEST_CASE("zeta powers reduce canonically mod Phi_8") {
  CyclotomicRing ring(8);
  CHECK(ring.degree() == 4);
  // zeta^4 = -1 mod x^4 + 1
  CHECK(ring.zeta_pow(4) == ring.from_int(-1));
  CHECK(ring.zeta_pow(8) == ring.one());
  // zeta^2 + zeta^6 = 0
  CHECK(ring.add(ring.zeta_pow(2), ring.zeta_pow(6)).is_zero());
}

TEST_CASE("ring laws and conjugation") {
  for (std::int64_t n : {3, 8, 15, 24, 80}) {
    CAPTURE(n);
    CyclotomicRing ring(n);
    // zeta * zeta^{n-1} = 1
    CHECK(ring.mul(ring.zeta_pow(1), ring.zeta_pow(n - 1)) == ring.one());
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::int64_t> ca(static_cast<std::size_t>(ring.degree()));
      std::vector<std::int64_t> cb(ca.size()), cc(ca.size());
      for (auto& v : ca) v = next_int(rng, -9, 9);
      for (auto& v : cb) v = next_int(rng, -9, 9);
      for (auto& v : cc) v = next_int(rng, -9, 9);
      CycInt a = ring.from_coeffs(ca), b = ring.from_coeffs(cb),
             c = ring.from_coeffs(cc);
      CHECK(ring.add(a, ring.neg(a)).is_zero());
      CHECK(ring.mul(a, b) == ring.mul(b, a));
      CHECK(ring.mul(a, ring.add(b, c)) ==
            ring.add(ring.mul(a, b), ring.mul(a, c)));
      // conj is an involution and a ring homomorphism
      CHECK(ring.conj(ring.conj(a)) == a);
      CHECK(ring.conj(ring.mul(a, b)) == ring.mul(ring.conj(a), ring.conj(b)));
    }
  }
}

TEST_CASE("Phi_n(zeta) = 0 and reduction is idempotent") {
  for (std::int64_t n : {8, 15, 48, 63}) {
    CAPTURE(n);
    CyclotomicRing ring(n);
    CHECK(ring.from_coeffs(ring.modulus()).is_zero());
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(2 * n));
      for (auto& v : c) v = next_int(rng, -50, 50);
      CycInt once = ring.from_coeffs(c);
      CycInt twice = ring.from_coeffs(once.coeffs());
      CHECK(once == twice);
    }
  }
}

TEST_CASE("modular evaluation is a ring homomorphism") {
  CyclotomicRing ring(8);
  std::mt19937_64 rng(23);
  for (int pi = 0; pi < 3; ++pi) {
    auto [ell, root] = modular::nth_eval_prime(8, pi);
    CAPTURE(ell);
    CHECK(modular::has_exact_order(root, 8, ell));
    CHECK(ring.eval_mod(ring.one(), ell, root) == 1);
    CHECK(ring.eval_mod(ring.from_coeffs(ring.modulus()), ell, root) == 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> ca(4), cb(4);
      for (auto& v : ca) v = next_int(rng, -9, 9);
      for (auto& v : cb) v = next_int(rng, -9, 9);
      CycInt a = ring.from_coeffs(ca), b = ring.from_coeffs(cb);
      std::int64_t ea = ring.eval_mod(a, ell, root);
      std::int64_t eb = ring.eval_mod(b, ell, root);
      CHECK(ring.eval_mod(ring.mul(a, b), ell, root) ==
            static_cast<std::int64_t>(modular::mulmod(
                static_cast<std::uint64_t>(ea),
                static_cast<std::uint64_t>(eb),
                static_cast<std::uint64_t>(ell))));
      CHECK(ring.eval_mod(ring.add(a, b), ell, root) == (ea + eb) % ell);
    }
  }
}

TEST_CASE("evaluation example: (zeta_8 + zeta_8^3)^2 = -2") {
  CyclotomicRing ring(8);
  CycInt s = ring.add(ring.zeta_pow(1), ring.zeta_pow(3));
  CHECK(ring.mul(s, s) == ring.from_int(-2));
  auto [ell, root] = modular::nth_eval_prime(8, 0);
  std::int64_t e = ring.eval_mod(s, ell, root);
  std::int64_t lhs = static_cast<std::int64_t>(modular::mulmod(
      static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(e),
      static_cast<std::uint64_t>(ell)));
  CHECK((lhs + 2) % ell == 0);
}

TEST_CASE("eval_mod rejects bad parameters") {
  CyclotomicRing ring(8);
  CHECK_THROWS_AS(ring.eval_mod(ring.one(), 18, 2), std::invalid_argument);
  // 17 = 1 mod 8 but 16 has order 2, not 8
  CHECK_THROWS_AS(ring.eval_mod(ring.one(), 17, 16), std::invalid_argument);
}

TEST_CASE("geometric sums match expanded products") {
  CyclotomicRing ring(24);
  // sum_{i=0}^{3} zeta^{5i + 7(3-i) + 2} built by hand
  CycInt expect = ring.zero();
  for (std::int64_t i = 0; i <= 3; ++i)
    expect = ring.add(expect, ring.zeta_pow(5 * i + 7 * (3 - i) + 2));
  CHECK(ring.geometric(5, 7, 3, 2) == expect);
}

TEST_CASE("context mismatch is rejected") {
  CyclotomicRing r8(8), r15(15);
  CHECK_THROWS_AS(r8.add(r8.one(), r15.one()), std::invalid_argument);
}
