#ifndef FOURBOX_RATIONAL_HPP
#define FOURBOX_RATIONAL_HPP

#include <cstdint>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace fourbox {

using Rational = boost::rational<std::int64_t>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = Matrix<Rational>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }
inline double to_double(double x) { return x; }

}  // namespace fourbox

namespace Eigen {

template <>
struct NumTraits<fourbox::Rational> : GenericNumTraits<fourbox::Rational> {
  using Real = fourbox::Rational;
  using NonInteger = fourbox::Rational;
  using Nested = fourbox::Rational;
  using Literal = fourbox::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // FOURBOX_RATIONAL_HPP
