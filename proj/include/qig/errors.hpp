#ifndef QIG_ERRORS_HPP
#define QIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qig {

// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

#define QIG_DEFINE_ERROR(NAME)                                                \
  class NAME : public Error {                                                 \
  public:                                                                     \
    explicit NAME(const std::string &msg) : Error(#NAME ": " + msg) {}        \
  }

QIG_DEFINE_ERROR(NotHermitian);
QIG_DEFINE_ERROR(NotPositiveDefinite);
QIG_DEFINE_ERROR(NotNormalized);
QIG_DEFINE_ERROR(DimensionMismatch);
QIG_DEFINE_ERROR(NotFaithful);
QIG_DEFINE_ERROR(NotRegular);
QIG_DEFINE_ERROR(UnknownName);
QIG_DEFINE_ERROR(ParameterOutOfRange);
QIG_DEFINE_ERROR(WeightOutOfRange);
QIG_DEFINE_ERROR(QuadratureFailure);
QIG_DEFINE_ERROR(MissingWeight);
QIG_DEFINE_ERROR(RankOutOfRange);
QIG_DEFINE_ERROR(ProbsNotNormalized);
QIG_DEFINE_ERROR(UnsupportedDimension);
QIG_DEFINE_ERROR(ParseError);

#undef QIG_DEFINE_ERROR

} // namespace qig

#endif
