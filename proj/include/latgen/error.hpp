#pragma once

#include <stdexcept>
#include <string>

namespace latgen {

enum class ErrorKind {
  ParseError,
  NotALattice,
  NotAChain,
  CyclicCovers,
  DuplicateCover,
  CapacityExceeded,
  BoundExceeded,
  FamilyMismatch,
  NonTermination,
  UnsupportedBlock,
  CertificateInvalid,
  NotASublattice,
  NotProper,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::DuplicateCover: return "DuplicateCover";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::UnsupportedBlock: return "UnsupportedBlock";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::NotProper: return "NotProper";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace latgen
