#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>

// Eigen scalar adaptors for the GMP classes. Only what dense storage and
// coefficient-wise arithmetic require; nothing that would need rounding.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using Index = Eigen::Index;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;
using RatMatrix = DenseMatrix<Rat>;
using RatVector = DenseVector<Rat>;

// Remainder in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return f;
}

inline Rat frac_rat(const Rat& q) { return q - Rat(floor_rat(q)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::size_t checked_size(const Int& v) {
  if (v < 0 || !v.fits_ulong_p())
    throw std::overflow_error("checked_size: value does not fit a machine word");
  return static_cast<std::size_t>(v.get_ui());
}

// -1 / 0 / +1 ordering of two integer vectors, coordinatewise from the front.
inline int compare_lex(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace toric
