#ifndef MEDAUG_AUGMENT_ERRORS_H_
#define MEDAUG_AUGMENT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace medaug {

class AugmentError : public std::runtime_error {
 public:
  enum class Kind {
    kNoEligibleUnits,
    kEmptyAcceptedSet,
    kRealignFailure,
    kIdCollision,
    kNotAccepted,
    kMalformedRecord,
  };

  AugmentError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Bad or missing configuration (including templates and secrets).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_ERRORS_H_
