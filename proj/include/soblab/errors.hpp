#pragma once

#include <stdexcept>
#include <string>

namespace soblab {

/// Library error kinds; mirrored one-to-one by the C API status codes.
enum class ErrorKind {
    InvalidArgument,  // bad literals, out-of-range parameters
    Unsupported,      // index combinations the underlying results exclude
    Precondition,     // operation preconditions violated
    UnknownLabel,     // corpus label not found
    Tolerance,        // requested tolerance unreachable within budget
    Io,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline Error invalid_argument_error(const std::string& msg) { return Error(ErrorKind::InvalidArgument, msg); }
inline Error unsupported_error(const std::string& msg) { return Error(ErrorKind::Unsupported, msg); }
inline Error precondition_error(const std::string& msg) { return Error(ErrorKind::Precondition, msg); }
inline Error unknown_label_error(const std::string& msg) { return Error(ErrorKind::UnknownLabel, msg); }
inline Error tolerance_error(const std::string& msg) { return Error(ErrorKind::Tolerance, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorKind::Io, msg); }

} // namespace soblab
