#ifndef SVCRATE_ERRORS_HPP
#define SVCRATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace svcrate {

/** Base class of every exception thrown by the library. */
class Error : public std::runtime_error
{
    public:
        explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SVCRATE_DEFINE_ERROR(Name)                                        \
    class Name : public Error                                             \
    {                                                                     \
        public:                                                           \
            explicit Name(const std::string& what = #Name) : Error(what) {} \
    };

SVCRATE_DEFINE_ERROR(DivisionByZero)
SVCRATE_DEFINE_ERROR(DimensionMismatch)
SVCRATE_DEFINE_ERROR(InvalidFieldOrder)
SVCRATE_DEFINE_ERROR(ZeroColumn)
SVCRATE_DEFINE_ERROR(RankDeficient)
SVCRATE_DEFINE_ERROR(ZeroVector)
SVCRATE_DEFINE_ERROR(MalformedLP)
SVCRATE_DEFINE_ERROR(OracleTooLarge)
SVCRATE_DEFINE_ERROR(EmptyIndexSet)
SVCRATE_DEFINE_ERROR(NonUnitRates)
SVCRATE_DEFINE_ERROR(NotATheoremVertex)
SVCRATE_DEFINE_ERROR(UnsupportedK)
SVCRATE_DEFINE_ERROR(ParseError)

#undef SVCRATE_DEFINE_ERROR

}   // namespace svcrate

#endif
