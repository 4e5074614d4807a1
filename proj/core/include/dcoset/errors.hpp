#ifndef DCOSET_ERRORS_HPP
#define DCOSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcoset {

// Base class for everything this library throws on bad input or a
// violated precondition. Queryable "expected" outcomes (a non-reduced
// composition, say) are reported through std::optional, not exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group enumeration found more elements than the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

// An operation combined cosets or expressions whose parabolic types do
// not match (wrong (I,J) pair, wrong junction subset).
struct MismatchedTypes : Error {
  using Error::Error;
};

// project() was asked to map into a quotient that is not coarser.
struct NotASuperset : Error {
  using Error::Error;
};

// A singlestep or multistep expression violates its chain conditions.
struct InvalidChain : Error {
  using Error::Error;
};

// Expression concatenation where the junction subsets differ.
struct JunctionMismatch : Error {
  using Error::Error;
};

// Text input (group file, word, subset, expression) failed to parse.
// The message names the offending token.
struct ParseError : Error {
  using Error::Error;
};

// verify::run_suite was asked for a check that is not registered.
struct UnknownCheckName : Error {
  using Error::Error;
};

}  // namespace dcoset

#endif
