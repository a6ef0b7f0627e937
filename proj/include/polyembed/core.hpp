#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace polyembed {

// One error vocabulary for the whole library. Codes are stable identifiers:
// they appear verbatim in CLI JSON output and drive the process exit code.
enum class Errc {
  // polygon admission
  TooFewVertices,
  DuplicateVertex,
  CollinearTriple,
  SelfIntersecting,
  NotCounterClockwise,
  // index / input plumbing
  IndexOutOfRange,
  TooFewPoints,
  DuplicatePoint,
  ParseError,
  IoFailure,
  CoordinateOutOfRange,
  // constructive embeddings
  NotConvex,
  NotPseudoConvex,
  SizeOutOfRange,
  DegenerateCycle,
  TooSmall,
  NoCycle,
  // oracle / generators
  PolygonTooLarge,
  GenerationFailed,
  InvalidN,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::CollinearTriple: return "CollinearTriple";
    case Errc::SelfIntersecting: return "SelfIntersecting";
    case Errc::NotCounterClockwise: return "NotCounterClockwise";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::ParseError: return "ParseError";
    case Errc::IoFailure: return "IoFailure";
    case Errc::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case Errc::NotConvex: return "NotConvex";
    case Errc::NotPseudoConvex: return "NotPseudoConvex";
    case Errc::SizeOutOfRange: return "SizeOutOfRange";
    case Errc::DegenerateCycle: return "DegenerateCycle";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NoCycle: return "NoCycle";
    case Errc::PolygonTooLarge: return "PolygonTooLarge";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::InvalidN: return "InvalidN";
  }
  return "UnknownError";
}

struct Error {
  Errc code;
  std::string detail;  // human-readable specifics (indices, bounds, ...)
};

// Minimal value-or-error carrier. Success is the default; errors always carry
// an Errc and usually a detail string naming the offending indices or bound.
template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error e) : v_(std::move(e)) {}
  static Result failure(Errc code, std::string detail = {}) {
    return Result(Error{code, std::move(detail)});
  }

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    assert(ok());
    return std::get<T>(v_);
  }
  T& value() {
    assert(ok());
    return std::get<T>(v_);
  }
  const Error& error() const {
    assert(!ok());
    return std::get<Error>(v_);
  }

 private:
  std::variant<T, Error> v_;
};

}  // namespace polyembed
