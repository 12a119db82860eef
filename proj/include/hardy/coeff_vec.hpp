#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

/// Bad input: violated precondition, malformed config, unknown key.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation finished but its numerical quality check failed.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated Taylor coefficient vector (f̂(0), ..., f̂(D)) of a function in H².
///
/// Immutable once constructed. Indexing past the degree reads as zero, which
/// is how mismatched degrees are combined throughout the library.
class CoeffVec {
 public:
  CoeffVec() : coeffs_(1, cplx{0.0, 0.0}) {}
  explicit CoeffVec(std::vector<cplx> coeffs);
  CoeffVec(std::initializer_list<cplx> coeffs) : CoeffVec(std::vector<cplx>(coeffs)) {}

  static CoeffVec zeros(std::size_t degree);
  static CoeffVec monomial(std::size_t power, std::size_t degree);
  static CoeffVec from_real(std::span<const double> values);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// Zero-padded read.
  cplx operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }

  /// Same function zero-padded or truncated to the given degree.
  CoeffVec resized(std::size_t degree) const;

  CoeffVec operator-() const;
  friend CoeffVec operator+(const CoeffVec& a, const CoeffVec& b);
  friend CoeffVec operator-(const CoeffVec& a, const CoeffVec& b);
  friend CoeffVec operator*(cplx s, const CoeffVec& a);
  friend bool operator==(const CoeffVec& a, const CoeffVec& b) = default;

 private:
  std::vector<cplx> coeffs_;
};

/// λ in the open unit disk.
///
/// The ordinary constructor keeps |λ| < 1 − 1e−9; near_boundary() admits
/// anything strictly inside the disk.
class DiskPoint {
 public:
  static constexpr double kBoundaryMargin = 1e-9;

  DiskPoint() = default;
  explicit DiskPoint(cplx lambda);
  DiskPoint(double re, double im) : DiskPoint(cplx{re, im}) {}
  static DiskPoint near_boundary(cplx lambda);

  cplx value() const { return lambda_; }
  double radius() const { return std::abs(lambda_); }

 private:
  struct Unchecked {};
  DiskPoint(cplx lambda, Unchecked) : lambda_(lambda) {}
  cplx lambda_{0.0, 0.0};
};

std::string to_string(cplx z);

}  // namespace hardy
