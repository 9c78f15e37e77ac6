#pragma once

// Semisimple (= p-regular) conjugacy classes of GL_2(k), the classes of l^*,
// and the class-function rings on them.
//
// Class labels use discrete logs: k-side relative to gamma_k, l-side relative
// to gamma.  An elliptic class {z, z^q} is labelled by the canonical
// representative min(t, t*q mod n).  Class functions are stored as vectors of
// exact cyclotomic integers aligned with the canonical enumeration order:
// central classes by dlog, then split classes lexicographically, then
// elliptic classes by canonical representative.
//
// FullClass (which adds the non-semisimple classes x * unipotent together
// with class sizes) exists only to support the character-table oracles; the
// main API never exposes it.

#include <cstdint>
#include <vector>

#include "modjl/field.hpp"

namespace modjl {

enum class Group { GL2, LX };

struct SsClass {
  enum class Kind { Central, Split, Elliptic };
  Kind kind;
  std::int64_t x = 0;  // Central: k-dlog; Split: smaller k-dlog; Elliptic: canonical l-dlog
  std::int64_t y = 0;  // Split: larger k-dlog; unused otherwise

  bool operator==(const SsClass&) const = default;
};

// min(t, t*q mod n): the label of the class of gamma^t in l^* \ k^*.
std::int64_t canonical_elliptic_rep(const FieldCtx& ctx, std::int64_t t);

std::vector<SsClass> enumerate_ss_classes(const FieldCtx& ctx);
// the n elements of l^*, as dlogs 0..n-1
std::vector<std::int64_t> enumerate_l_classes(const FieldCtx& ctx);

// class index in the canonical enumeration; throws on an invalid label
std::int64_t ss_class_index(const FieldCtx& ctx, const SsClass& c);

// eigenvalue dlogs (a, b) of a semisimple class, as elements of l^*:
// Central s -> ((q+1)s, (q+1)s); Split (s1,s2) -> ((q+1)s1, (q+1)s2);
// Elliptic t -> (t, t*q mod n).
std::pair<std::int64_t, std::int64_t> eigen_dlogs(const FieldCtx& ctx,
                                                  const SsClass& c);

class ClassFn {
 public:
  ClassFn(Group g, std::int64_t q, std::vector<CycInt> values)
      : group_(g), q_(q), values_(std::move(values)) {}

  Group group() const { return group_; }
  std::int64_t q() const { return q_; }
  const std::vector<CycInt>& values() const { return values_; }
  const CycInt& value(std::size_t i) const { return values_.at(i); }

  bool operator==(const ClassFn&) const = default;

 private:
  Group group_;
  std::int64_t q_;
  std::vector<CycInt> values_;
};

std::size_t class_count(const FieldCtx& ctx, Group g);

ClassFn cf_constant(const FieldCtx& ctx, Group g, std::int64_t value);
ClassFn cf_add(const FieldCtx& ctx, const ClassFn& a, const ClassFn& b);
ClassFn cf_sub(const FieldCtx& ctx, const ClassFn& a, const ClassFn& b);
ClassFn cf_mul(const FieldCtx& ctx, const ClassFn& a, const ClassFn& b);
ClassFn cf_scale(const FieldCtx& ctx, const ClassFn& a, std::int64_t s);

// ---- oracle support ----------------------------------------------------

struct FullClass {
  enum class Kind { Central, NonSemisimple, Split, Elliptic };
  Kind kind;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t size = 0;  // order of the conjugacy class

  bool operator==(const FullClass&) const = default;
};

std::vector<FullClass> enumerate_full_classes(const FieldCtx& ctx);

// 2x2 matrices over k, row major [[a, b], [c, d]]
struct Mat2 {
  FlElem a, b, c, d;
  bool operator==(const Mat2&) const = default;
};

Mat2 mat_mul(const FieldCtx& ctx, const Mat2& m1, const Mat2& m2);
FlElem mat_det(const FieldCtx& ctx, const Mat2& m);
Mat2 mat_inv(const FieldCtx& ctx, const Mat2& m);  // throws on singular

// conjugacy class of an invertible matrix; throws on det = 0
FullClass class_of(const FieldCtx& ctx, const Mat2& m);

// i(z): the matrix of multiplication by z on l with respect to the k-basis
// {1, gamma}
Mat2 embed_l_element(const FieldCtx& ctx, FlElem z);

// a representative matrix of the given class (diag, x*unipotent, or i(z))
Mat2 representative_matrix(const FieldCtx& ctx, const FullClass& c);

// all of GL_2(k); pre: q <= 9
std::vector<Mat2> all_invertible_matrices(const FieldCtx& ctx);

std::int64_t gl2_order(const FieldCtx& ctx);  // (q^2-1)(q^2-q)

}  // namespace modjl
