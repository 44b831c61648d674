#include "pcpforge/rational.hpp"

#include "pcpforge/error.hpp"

namespace pcpforge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::HypergraphMismatch: return "HypergraphMismatch";
    case Errc::EmptyInstance: return "EmptyInstance";
    case Errc::ParseError: return "ParseError";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ExpanderNotFound: return "ExpanderNotFound";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NonBinaryInstance: return "NonBinaryInstance";
    case Errc::TesterTooLarge: return "TesterTooLarge";
    case Errc::ArityTooHigh: return "ArityTooHigh";
    case Errc::NotLabelCover: return "NotLabelCover";
    case Errc::NotE3SAT: return "NotE3SAT";
    case Errc::NotAClique: return "NotAClique";
    case Errc::InconsistentClique: return "InconsistentClique";
    case Errc::OddLength: return "OddLength";
    case Errc::SupportTooLarge: return "SupportTooLarge";
    case Errc::BlockMissing: return "BlockMissing";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rational rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_parse(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational");
  for (char c : s) {
    if (!(c == '/' || c == '-' || (c >= '0' && c <= '9')))
      fail(Errc::ParseError, "bad rational '" + s + "'");
  }
  try {
    Rational q(s);
    q.canonicalize();
    if (q.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
    return q;
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational '" + s + "'");
  }
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_double(const Rational& q) { return q.get_d(); }

Rational geometric_tail(long t, long e) {
  require(t >= 1 && e >= 0, Errc::InvalidArgument, "geometric_tail");
  Rational base = rat(t - 1, t);
  Rational out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace pcpforge
