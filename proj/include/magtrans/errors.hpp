#pragma once

#include <stdexcept>
#include <string>

namespace magtrans {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got,
                    const std::string& where)
      : Error(where + ": dimension mismatch (expected " +
              std::to_string(expected) + ", got " + std::to_string(got) +
              ")") {}
};

/// Malformed textual input (rational strings, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

class IncompatibleAction : public Error {
 public:
  using Error::Error;
};

class NonAffinePatch : public Error {
 public:
  using Error::Error;
};

class AnsatzNotLinear : public Error {
 public:
  using Error::Error;
};

/// A shift would move occupation into the guard band of a mode window.
class GuardBandOverflow : public Error {
 public:
  GuardBandOverflow(int color, int mode)
      : Error("guard band overflow at color " + std::to_string(color) +
              ", mode " + std::to_string(mode)),
        color_(color),
        mode_(mode) {}

  int color() const noexcept { return color_; }
  int mode() const noexcept { return mode_; }

 private:
  int color_;
  int mode_;
};

/// g(p)g(q) and g(p+q) did not differ by a common scalar on the spanning set.
class NonScalarRatio : public Error {
 public:
  using Error::Error;
};

class ModeOutOfWindow : public Error {
 public:
  ModeOutOfWindow(int color, int mode)
      : Error("mode " + std::to_string(mode) + " of color " +
              std::to_string(color) + " is outside the window") {}
};

}  // namespace magtrans
