#ifndef SEQCHAOS_ERRORS_HPP
#define SEQCHAOS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqchaos {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested size is above the documented ceiling of an operation.
class CapacityExceeded : public Error {
 public:
  CapacityExceeded(const std::string& what, std::size_t requested, std::size_t ceiling)
      : Error("CapacityExceeded: " + what + " requested " + std::to_string(requested) +
              ", ceiling is " + std::to_string(ceiling)),
        requested_(requested),
        ceiling_(ceiling) {}

  std::size_t requested() const { return requested_; }
  std::size_t ceiling() const { return ceiling_; }

 private:
  std::size_t requested_;
  std::size_t ceiling_;
};

class TooShort : public Error {
 public:
  TooShort(std::size_t length, std::size_t minimum)
      : Error("TooShort: sequence of length " + std::to_string(length) + " needs at least " +
              std::to_string(minimum) + " elements"),
        length_(length) {}

  std::size_t length() const { return length_; }

 private:
  std::size_t length_;
};

/// source[index] == source[index - 1] where that difference is used as a denominator.
/// index is 0-based into the source sequence.
class ZeroDenominator : public Error {
 public:
  explicit ZeroDenominator(std::size_t index)
      : Error("ZeroDenominator: source[" + std::to_string(index) + "] equals source[" +
              std::to_string(index == 0 ? 0 : index - 1) + "] (index " + std::to_string(index) +
              ")"),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("EmptyInput: transform needs at least one sample") {}
};

class EmptyData : public Error {
 public:
  explicit EmptyData(const std::string& what) : Error("EmptyData: nothing to plot in " + what) {}
};

class SinkFailure : public Error {
 public:
  explicit SinkFailure(const std::string& what) : Error("SinkFailure: " + what) {}
};

class UnknownFigure : public Error {
 public:
  explicit UnknownFigure(const std::string& name)
      : Error("UnknownFigure: '" + name + "' (expected fig1..fig9)") {}
};

/// Malformed input files (CSV ingestion).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

}  // namespace seqchaos

#endif  // SEQCHAOS_ERRORS_HPP
