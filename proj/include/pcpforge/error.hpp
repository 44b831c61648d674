#ifndef PCPFORGE_ERROR_HPP
#define PCPFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pcpforge {

enum class Errc {
  UnknownVariable,
  UnknownEdge,
  ArityMismatch,
  DomainMismatch,
  HypergraphMismatch,
  EmptyInstance,
  ParseError,
  TooLarge,
  ExpanderNotFound,
  SizeMismatch,
  NotRegular,
  NotConnected,
  NonBinaryInstance,
  TesterTooLarge,
  ArityTooHigh,
  NotLabelCover,
  NotE3SAT,
  NotAClique,
  InconsistentClique,
  OddLength,
  SupportTooLarge,
  BlockMissing,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace pcpforge

#endif
