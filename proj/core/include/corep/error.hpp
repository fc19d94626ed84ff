#pragma once

#include <stdexcept>
#include <string>

namespace corep {

// Structural problems (bad indices, shape mismatches, malformed input) are
// exceptions; failed mathematical checks are report contents, never thrown.
class Error : public std::runtime_error {
public:
  enum class Kind {
    Structural,  // malformed data: out-of-range index, shape mismatch
    Escape,      // a product left the finite window/span
    NonSplit,    // a simple block is not a full matrix coalgebra over the field
    Parameter,   // invalid family parameters
    Parse,       // unreadable descriptor/scalar/file
  };

  Error(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

[[noreturn]] inline void structural_error(const std::string& msg) {
  throw Error(Error::Kind::Structural, msg);
}
[[noreturn]] inline void escape_error(const std::string& msg) {
  throw Error(Error::Kind::Escape, msg);
}
[[noreturn]] inline void nonsplit_error(const std::string& msg) {
  throw Error(Error::Kind::NonSplit, msg);
}
[[noreturn]] inline void parameter_error(const std::string& msg) {
  throw Error(Error::Kind::Parameter, msg);
}
[[noreturn]] inline void parse_error(const std::string& msg) {
  throw Error(Error::Kind::Parse, msg);
}

}  // namespace corep
