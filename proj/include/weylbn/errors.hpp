#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylbn {

// Base of every recoverable error raised by the library. Internal invariant
// violations are reported as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WEYLBN_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

WEYLBN_DEFINE_ERROR(InvalidSpec);
WEYLBN_DEFINE_ERROR(NonCrystallographicInput);
WEYLBN_DEFINE_ERROR(NotNonReduced);
WEYLBN_DEFINE_ERROR(NotReduced);
WEYLBN_DEFINE_ERROR(GroupTooLarge);
WEYLBN_DEFINE_ERROR(WitnessNotApplicable);
WEYLBN_DEFINE_ERROR(RankTooSmall);
WEYLBN_DEFINE_ERROR(HNotNormal);
WEYLBN_DEFINE_ERROR(NotTwoTransitive);
WEYLBN_DEFINE_ERROR(NoConjugatorFound);
WEYLBN_DEFINE_ERROR(SubgroupNotFound);
WEYLBN_DEFINE_ERROR(CapExceeded);

#undef WEYLBN_DEFINE_ERROR

class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(std::size_t cap, std::size_t partial)
      : Error("reduced-word enumeration exceeded cap " + std::to_string(cap) +
              " (" + std::to_string(partial) + " words found before stopping)"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

}  // namespace weylbn
