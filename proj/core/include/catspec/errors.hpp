#pragma once

#include <stdexcept>
#include <string>

namespace catspec {

// Base class for every domain failure in this library. Callers that need to
// distinguish causes catch the concrete type; recover() catches Error and
// folds name() plus the message into a failure status.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what, const char* name = "Error")
        : std::runtime_error(what), name_(name) {}
    const char* name() const { return name_; }

private:
    const char* name_;
};

#define CATSPEC_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(what, #Name) {}    \
    }

// polynomial / fraction layer
CATSPEC_DEFINE_ERROR(DivisionByZeroPoly);
CATSPEC_DEFINE_ERROR(DimensionMismatch);
CATSPEC_DEFINE_ERROR(NotDivisible);

// tree layer
CATSPEC_DEFINE_ERROR(NotCaterpillar);
CATSPEC_DEFINE_ERROR(RootNotStalkEnd);
CATSPEC_DEFINE_ERROR(RootDegreeNotOne);

// continued fraction layer
CATSPEC_DEFINE_ERROR(NotCaterpillarForm);
CATSPEC_DEFINE_ERROR(ToleranceExceeded);

// spectral recovery layer
CATSPEC_DEFINE_ERROR(InconsistentWindows);
CATSPEC_DEFINE_ERROR(MirrorMismatch);
CATSPEC_DEFINE_ERROR(CountMismatch);
CATSPEC_DEFINE_ERROR(UnexpectedLineCluster);

#undef CATSPEC_DEFINE_ERROR

}  // namespace catspec
