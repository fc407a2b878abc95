#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace scs {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Failure classes with dedicated CLI exit codes.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct rate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct decode_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "p/q", integers, and decimal strings ("0.205") exactly.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace scs
