#pragma once

#include <stdexcept>
#include <string>

namespace gsqg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

#define GSQG_DECLARE_ERROR(Name)                                            \
    class Name : public Error {                                             \
    public:                                                                 \
        using Error::Error;                                                 \
        const char* kind() const noexcept override { return #Name; }        \
    }

GSQG_DECLARE_ERROR(DomainError);
GSQG_DECLARE_ERROR(NoFeasibleT0);
GSQG_DECLARE_ERROR(AssemblyError);
GSQG_DECLARE_ERROR(DegenerateProfile);
GSQG_DECLARE_ERROR(TailFitError);
GSQG_DECLARE_ERROR(NegativeT);
GSQG_DECLARE_ERROR(NewtonFail);
GSQG_DECLARE_ERROR(GridError);
GSQG_DECLARE_ERROR(ConfigError);

#undef GSQG_DECLARE_ERROR

}  // namespace gsqg
