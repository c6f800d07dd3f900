#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latkit {

enum class Err {
  NotAPartialOrder,
  NotALattice,
  CapExceeded,
  SizeGuard,
  NotDistributive,
  NotConvex,
  NotAnInterval,
  CarrierMismatch,
  NotAHomomorphism,
  NotDistributiveTarget,
  UnknownFixture,
  UnknownElement,
  UnboundVariable,
  ProbeOutsideVariety,
  BudgetExceeded,
  UnclassifiableGadget,
  ElementOutOfWindow,
  ParseError,
  BadDocument,
  Internal,
};

const char* err_name(Err e);

// All refutations carry the offending element indices so callers can show a
// concrete witness, not just a message.
class Error : public std::runtime_error {
public:
  Error(Err code, std::string msg, std::vector<int> witness = {})
      : std::runtime_error(std::move(msg)), code(code), witness(std::move(witness)) {}

  Err code;
  std::vector<int> witness;
};

[[noreturn]] inline void fail(Err code, std::string msg, std::vector<int> witness = {}) {
  throw Error(code, std::move(msg), std::move(witness));
}

}  // namespace latkit
