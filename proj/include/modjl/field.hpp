#pragma once

// The arithmetic universe for one prime power q = p^f:
//
//   k = F_q  and its quadratic extension  l = F_{q^2},
//   gamma   a fixed generator of l^* (order n = q^2 - 1),
//   gamma_k = gamma^{q+1}, a generator of k^*,
//   Z[zeta_n] with zeta the Teichmueller lift of gamma.
//
// Nonzero elements of l are discrete logs relative to gamma; addition goes
// through a Zech logarithm table.  All choices (defining polynomial, gamma)
// are deterministic so that tables and golden files are reproducible:
// the modulus is the first irreducible monic polynomial of degree 2f in
// lexicographic order on (c_0, ..., c_{2f-1}), and gamma is the first
// generator in lexicographic order on coordinate vectors (a_0, ..., a_{2f-1}).

#include <cstdint>
#include <utility>
#include <vector>

#include "modjl/cyclotomic.hpp"

namespace modjl {

class FlElem {
 public:
  FlElem() = default;  // zero
  static FlElem zero() { return FlElem(); }
  static FlElem from_dlog(std::int64_t t, std::int64_t n);

  bool is_zero() const { return d_ < 0; }
  std::int64_t dlog() const;  // pre: !is_zero()

  bool operator==(const FlElem&) const = default;

 private:
  std::int64_t d_ = -1;
};

class FieldCtx {
 public:
  FieldCtx(std::int64_t p, std::int64_t f, std::int64_t max_q = 32);

  std::int64_t p() const { return p_; }
  std::int64_t f() const { return f_; }
  std::int64_t q() const { return q_; }
  std::int64_t n() const { return n_; }  // q^2 - 1

  // monic defining polynomial of l over F_p, degree 2f, constant term first
  const std::vector<std::int64_t>& modulus_poly() const { return modulus_; }
  // zech[t] = dlog of 1 + gamma^t, or -1 when 1 + gamma^t = 0
  const std::vector<std::int64_t>& zech_table() const { return zech_; }
  const CyclotomicRing& ring() const { return ring_; }

  FlElem one() const { return FlElem::from_dlog(0, n_); }
  FlElem gamma() const { return FlElem::from_dlog(1, n_); }
  FlElem gamma_k() const { return FlElem::from_dlog(q_ + 1, n_); }

  FlElem add(FlElem a, FlElem b) const;
  FlElem neg(FlElem a) const;
  FlElem mul(FlElem a, FlElem b) const;
  FlElem inv(FlElem a) const;               // throws on zero
  FlElem pow(FlElem a, std::int64_t e) const;
  FlElem frobenius(FlElem a) const;         // x -> x^q
  FlElem norm(FlElem a) const;              // x -> x^{q+1}, lands in k

  bool in_k(FlElem a) const;                // zero counts as in k
  std::int64_t k_dlog(FlElem a) const;      // pre: nonzero, in k; rel. gamma_k
  FlElem from_k_dlog(std::int64_t s) const;

  CycInt teich(FlElem z) const;             // pre: nonzero; gamma^t -> zeta^t

  // coordinate encoding of l = F_p[x]/(modulus): index = sum a_i p^i where
  // a_i is the coefficient of x^i. Used by the matrix-level oracles.
  std::int64_t element_index(FlElem a) const;     // 0 for zero
  FlElem element_from_index(std::int64_t idx) const;
  std::int64_t index_add(std::int64_t i, std::int64_t j) const;
  // z = a + b*gamma with a, b in k (basis {1, gamma} of l over k)
  std::pair<FlElem, FlElem> k_coordinates(FlElem z) const;

 private:
  std::int64_t index_add_impl(std::int64_t i, std::int64_t j) const;
  std::int64_t p_, f_, q_, n_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::int64_t> pow_idx_;   // index of gamma^t, t in [0, n)
  std::vector<std::int64_t> dlog_idx_;  // dlog by index; -1 at 0
  std::vector<std::int64_t> zech_;
  std::vector<std::pair<std::int64_t, std::int64_t>> kcoord_;  // by index
  CyclotomicRing ring_;
};

}  // namespace modjl
