#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pealab {

/// Sentinel for undefined entries in partial operation tables.
inline constexpr int kUndef = -1;

/// Minimal value-or-error carrier; E holds the diagnostic on failure.
template <class T, class E>
struct Result {
  std::optional<T> value;
  std::optional<E> error;

  bool ok() const { return value.has_value(); }
  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }

  static Result success(T v) { return Result{std::move(v), std::nullopt}; }
  static Result failure(E e) { return Result{std::nullopt, std::move(e)}; }
};

/// Raised when a law mentions an operation the model does not provide.
class UnsupportedOperation : public std::runtime_error {
 public:
  explicit UnsupportedOperation(const std::string& what)
      : std::runtime_error(what) {}
};

/// Raised by converters on invalid input (e.g. non-lattice order,
/// mismatching defining expressions).
class ConversionError : public std::runtime_error {
 public:
  ConversionError(std::string kind, std::string what, int x = -1, int y = -1)
      : std::runtime_error(std::move(what)), kind(std::move(kind)), x(x), y(y) {}
  std::string kind;
  int x, y;
};

}  // namespace pealab
