#pragma once

// Word-sized modular arithmetic: deterministic primality testing, evaluation
// primes ell = 1 (mod n) with a root of unity of exact order n, dense linear
// algebra mod ell, and CRT lifting with symmetric representatives.  This is
// the engine behind the exact decompositions: solve mod a few primes, lift,
// then verify the candidate by substitution in Z[zeta].

#include <cstdint>
#include <vector>

namespace modjl::modular {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);  // m prime, a != 0 mod m

bool is_prime(std::uint64_t x);

// Distinct prime factors, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t x);

struct EvalPrime {
  std::int64_t ell;   // prime, ell = 1 (mod n)
  std::int64_t root;  // element of multiplicative order exactly n mod ell
};

// index-th member (0-based) of the deterministic sequence of primes
// ell = k*n + 1 with ell >= 2^30, ascending; root is derived from the
// smallest base whose (ell-1)/n power has exact order n.
EvalPrime nth_eval_prime(std::int64_t n, int index);

// true iff root has multiplicative order exactly n mod ell.
bool has_exact_order(std::int64_t root, std::int64_t n, std::int64_t ell);

// Dense LU factorization mod a word-sized prime, reusable across many
// right-hand sides.
class FpLU {
 public:
  FpLU(std::vector<std::vector<std::uint64_t>> matrix, std::uint64_t p);
  bool singular() const { return singular_; }
  // pre: !singular(); rhs.size() == dimension
  std::vector<std::uint64_t> solve(const std::vector<std::uint64_t>& rhs) const;

 private:
  std::uint64_t p_;
  std::size_t dim_;
  bool singular_ = false;
  std::vector<std::vector<std::uint64_t>> lu_;
  std::vector<std::size_t> perm_;
};

// Row rank of an arbitrary rectangular matrix mod p.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> matrix,
                       std::uint64_t p);

// Combine residues x = r[i] (mod ell[i]) into the symmetric representative
// of smallest absolute value.  Throws std::overflow_error if the result does
// not fit in int64.
std::int64_t crt_symmetric(const std::vector<std::uint64_t>& residues,
                           const std::vector<std::int64_t>& primes);

}  // namespace modjl::modular
