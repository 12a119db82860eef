#include "hardy/coeff_vec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

CoeffVec::CoeffVec(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ValidationError("CoeffVec: coefficient list must be nonempty");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n].real()) || !std::isfinite(coeffs_[n].imag())) {
      throw ValidationError("CoeffVec: non-finite coefficient at index " + std::to_string(n));
    }
  }
}

CoeffVec CoeffVec::zeros(std::size_t degree) { return CoeffVec(std::vector<cplx>(degree + 1)); }

CoeffVec CoeffVec::monomial(std::size_t power, std::size_t degree) {
  if (power > degree) throw ValidationError("CoeffVec::monomial: power exceeds degree");
  std::vector<cplx> c(degree + 1);
  c[power] = 1.0;
  return CoeffVec(std::move(c));
}

CoeffVec CoeffVec::from_real(std::span<const double> values) {
  return CoeffVec(std::vector<cplx>(values.begin(), values.end()));
}

CoeffVec CoeffVec::resized(std::size_t degree) const {
  std::vector<cplx> c(degree + 1);
  std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
  return CoeffVec(std::move(c));
}

CoeffVec CoeffVec::operator-() const {
  std::vector<cplx> c(coeffs_);
  for (auto& v : c) v = -v;
  return CoeffVec(std::move(c));
}

CoeffVec operator+(const CoeffVec& a, const CoeffVec& b) {
  std::vector<cplx> c(std::max(a.size(), b.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] + b[n];
  return CoeffVec(std::move(c));
}

CoeffVec operator-(const CoeffVec& a, const CoeffVec& b) {
  std::vector<cplx> c(std::max(a.size(), b.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] - b[n];
  return CoeffVec(std::move(c));
}

CoeffVec operator*(cplx s, const CoeffVec& a) {
  std::vector<cplx> c(a.coeffs_);
  for (auto& v : c) v *= s;
  return CoeffVec(std::move(c));
}

DiskPoint::DiskPoint(cplx lambda) : lambda_(lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) ||
      std::abs(lambda) >= 1.0 - kBoundaryMargin) {
    throw ValidationError("DiskPoint: |lambda| must be < 1 - 1e-9 (got " + to_string(lambda) +
                          "); use DiskPoint::near_boundary for radii closer to 1");
  }
}

DiskPoint DiskPoint::near_boundary(cplx lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || std::abs(lambda) >= 1.0) {
    throw ValidationError("DiskPoint: |lambda| must be < 1 (got " + to_string(lambda) + ")");
  }
  return DiskPoint(lambda, Unchecked{});
}

std::string to_string(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << "," << z.imag();
  return os.str();
}

}  // namespace hardy
