#ifndef HCV_ERRORS_HPP
#define HCV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root finder hit its iteration cap.  Callers must treat the instance as
/// "unverified", never as a negative result.
struct NonConvergence : Error {
    using Error::Error;
};

/// Cohn reduction attempted with |a_0| >= |a_n|.
struct HypothesisViolated : Error {
    using Error::Error;
};

/// Strip mapping requested at beta in {0, pi}.
struct DegenerateParameter : Error {
    using Error::Error;
};

/// Series division by a series with vanishing constant term.
struct ZeroConstantTerm : Error {
    using Error::Error;
};

/// Shear with 1 + omega(0) = 0.
struct DegenerateShear : Error {
    using Error::Error;
};

/// Special-case factorization requested for parameters outside the branch.
struct BranchMismatch : Error {
    using Error::Error;
};

/// Column split vectors fail to reassemble the actual matrix column.
struct SplitInconsistent : Error {
    using Error::Error;
};

}  // namespace hcv

#endif
