#include "dslab/scalar.hpp"

#include "dslab/error.hpp"

namespace dslab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::WeightArityMismatch: return "WeightArityMismatch";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::IrrationalSpectrum: return "IrrationalSpectrum";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotSemisimpleAction: return "NotSemisimpleAction";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::RepresentativeInconsistency: return "RepresentativeInconsistency";
    case ErrorKind::NotASubmodule: return "NotASubmodule";
    case ErrorKind::NotInBracketImage: return "NotInBracketImage";
    case ErrorKind::QuotientFailure: return "QuotientFailure";
    case ErrorKind::NotStandardForm: return "NotStandardForm";
    case ErrorKind::NotToral: return "NotToral";
    case ErrorKind::ImageMismatch: return "ImageMismatch";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::NotGraded: return "NotGraded";
  }
  return "Unknown";
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::SchemaViolation, "malformed scalar '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  if (!valid_int(num)) throw bad();
  Scalar out;
  if (slash == std::string_view::npos) {
    out = Scalar(mpz_class(num));
  } else {
    std::string den(text.substr(slash + 1));
    if (!valid_int(den) || den[0] == '-') throw bad();
    mpz_class d(den);
    if (d == 0) throw bad();
    out = Scalar(mpz_class(num), d);
    out.canonicalize();
  }
  return out;
}

}  // namespace dslab
