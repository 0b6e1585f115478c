#ifndef GRPD_ERROR_HPP
#define GRPD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grpd {

// Every validation failure carries one of these kinds so callers (and the
// command line driver) can name the violated invariant.
enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NoInverse,
  IdentityNotZero,
  NotHomomorphism,
  NotNormal,
  SectionNotSplit,
  KernelMismatch,
  RelationViolated,
  IncompatibleAction,
  NotFaithful,
  KernelNotGroupoid,
  NotCrossedModule,
  NotGroupoid,
  NotNormalInTotal,
  ParseError,
  BadInput,
};

const char *kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &msg)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace grpd

#endif // GRPD_ERROR_HPP
