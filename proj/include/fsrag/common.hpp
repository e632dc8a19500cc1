#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsrag {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file (bad JSON, bad record shape). Carries line context.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input violating a domain invariant (duplicate id, dangling
/// reference, empty gold set, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Provider-side failure: transport, protocol, or configuration.
class GatewayError : public Error {
 public:
  using Error::Error;
};

/// Replay-mode cassette has no entry for the requested digest.
class ReplayMissError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

/// Model answered outside the expected output contract.
class ProtocolError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string read_file(const std::filesystem::path& path);
/// Writes via a temp file in the same directory, then renames into place.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fsrag
