#pragma once

#include <stdexcept>
#include <string>

namespace k3cert {

// Base of every error raised by the library. Certificate failures are never
// reported through exceptions; those show up as a failing report instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define K3CERT_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

K3CERT_DEFINE_ERROR(RingMismatch);
K3CERT_DEFINE_ERROR(ArityMismatch);
K3CERT_DEFINE_ERROR(DivisionByZero);
K3CERT_DEFINE_ERROR(NotDivisible);
K3CERT_DEFINE_ERROR(MissingImage);
K3CERT_DEFINE_ERROR(InhomogeneousImage);
K3CERT_DEFINE_ERROR(DegreeMismatch);
K3CERT_DEFINE_ERROR(AmbientMismatch);
K3CERT_DEFINE_ERROR(ParseError);
K3CERT_DEFINE_ERROR(NotInIdeal);
K3CERT_DEFINE_ERROR(ZeroInput);
K3CERT_DEFINE_ERROR(DependentForms);
K3CERT_DEFINE_ERROR(SliceViolation);
K3CERT_DEFINE_ERROR(Degenerate);
K3CERT_DEFINE_ERROR(InvalidArgument);
K3CERT_DEFINE_ERROR(UsageError);
K3CERT_DEFINE_ERROR(IoError);

#undef K3CERT_DEFINE_ERROR

}  // namespace k3cert
