#include "modjl/modular.hpp"

#include <stdexcept>

namespace modjl::modular {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  return powmod(a, m - 2, m);
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (x % p == 0) return x == p;
  }
  // Miller-Rabin with a base set proven deterministic for all 64-bit inputs.
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t v = powmod(a, d, x);
    if (v == 1 || v == x - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      v = mulmod(v, v, x);
      if (v == x - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t x) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

bool has_exact_order(std::int64_t root, std::int64_t n, std::int64_t ell) {
  const auto l = static_cast<std::uint64_t>(ell);
  if (powmod(static_cast<std::uint64_t>(root), static_cast<std::uint64_t>(n),
             l) != 1)
    return false;
  for (std::int64_t pf : prime_factors(n)) {
    if (powmod(static_cast<std::uint64_t>(root),
               static_cast<std::uint64_t>(n / pf), l) == 1)
      return false;
  }
  return true;
}

EvalPrime nth_eval_prime(std::int64_t n, int index) {
  if (n < 1) throw std::invalid_argument("nth_eval_prime: n must be positive");
  const std::int64_t lo = std::int64_t{1} << 30;
  std::int64_t k = (lo - 1) / n + 1;
  int found = 0;
  for (;; ++k) {
    std::int64_t ell = k * n + 1;
    if (!is_prime(static_cast<std::uint64_t>(ell))) continue;
    if (found++ < index) continue;
    const auto l = static_cast<std::uint64_t>(ell);
    for (std::uint64_t a = 2;; ++a) {
      std::int64_t r = static_cast<std::int64_t>(
          powmod(a, static_cast<std::uint64_t>((ell - 1) / n), l));
      if (has_exact_order(r, n, ell)) return {ell, r};
    }
  }
}

FpLU::FpLU(std::vector<std::vector<std::uint64_t>> matrix, std::uint64_t p)
    : p_(p), dim_(matrix.size()), lu_(std::move(matrix)) {
  perm_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) perm_[i] = i;
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t piv = col;
    while (piv < dim_ && lu_[piv][col] % p_ == 0) ++piv;
    if (piv == dim_) {
      singular_ = true;
      return;
    }
    std::swap(lu_[col], lu_[piv]);
    std::swap(perm_[col], perm_[piv]);
    const std::uint64_t inv = invmod(lu_[col][col] % p_, p_);
    for (std::size_t row = col + 1; row < dim_; ++row) {
      std::uint64_t factor = mulmod(lu_[row][col] % p_, inv, p_);
      lu_[row][col] = factor;  // store the multiplier in the L part
      if (factor == 0) continue;
      for (std::size_t j = col + 1; j < dim_; ++j) {
        std::uint64_t sub = mulmod(factor, lu_[col][j] % p_, p_);
        lu_[row][j] = (lu_[row][j] % p_ + p_ - sub) % p_;
      }
    }
  }
}

std::vector<std::uint64_t> FpLU::solve(
    const std::vector<std::uint64_t>& rhs) const {
  if (singular_) throw std::logic_error("FpLU::solve on singular matrix");
  if (rhs.size() != dim_) throw std::invalid_argument("FpLU::solve: size");
  std::vector<std::uint64_t> y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::uint64_t v = rhs[perm_[i]] % p_;
    for (std::size_t j = 0; j < i; ++j) {
      v = (v + p_ - mulmod(lu_[i][j], y[j], p_)) % p_;
    }
    y[i] = v;
  }
  std::vector<std::uint64_t> x(dim_);
  for (std::size_t ii = dim_; ii-- > 0;) {
    std::uint64_t v = y[ii];
    for (std::size_t j = ii + 1; j < dim_; ++j) {
      v = (v + p_ - mulmod(lu_[ii][j], x[j], p_)) % p_;
    }
    x[ii] = mulmod(v, invmod(lu_[ii][ii], p_), p_);
  }
  return x;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m,
                       std::uint64_t p) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const std::uint64_t inv = invmod(m[rank][col] % p, p);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      std::uint64_t factor = mulmod(m[row][col] % p, inv, p);
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        std::uint64_t sub = mulmod(factor, m[rank][j] % p, p);
        m[row][j] = (m[row][j] % p + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::int64_t crt_symmetric(const std::vector<std::uint64_t>& residues,
                           const std::vector<std::int64_t>& primes) {
  if (residues.size() != primes.size() || residues.empty())
    throw std::invalid_argument("crt_symmetric: size mismatch");
  __int128 value = static_cast<__int128>(residues[0]);
  __int128 mod = primes[0];
  for (std::size_t i = 1; i < residues.size(); ++i) {
    const auto ell = static_cast<std::uint64_t>(primes[i]);
    std::uint64_t cur = static_cast<std::uint64_t>(
        ((value % ell) + static_cast<__int128>(ell)) % ell);
    std::uint64_t delta = (residues[i] % ell + ell - cur) % ell;
    std::uint64_t minv =
        invmod(static_cast<std::uint64_t>((mod % ell + ell) % ell), ell);
    std::uint64_t t = mulmod(delta, minv, ell);
    value += mod * static_cast<__int128>(t);
    mod *= ell;
  }
  if (value > mod / 2) value -= mod;
  constexpr __int128 kMax = static_cast<__int128>(INT64_MAX);
  if (value > kMax || value < -kMax)
    throw std::overflow_error("crt_symmetric: lift exceeds int64");
  return static_cast<std::int64_t>(value);
}

}  // namespace modjl::modular
