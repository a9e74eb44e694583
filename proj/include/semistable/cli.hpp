#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace semistable::cli {

inline constexpr std::string_view kToolName = "semistable-gate";
inline constexpr std::string_view kToolVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInternal = 4;

// Malformed document: bad JSON, wrong type, missing or unknown key.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Command-line flags that are folded into the document before dispatch.
struct Flags {
  bool compact = false;  // --json
  bool min_ell = false;  // --min-ell
  std::vector<std::string> ells;
  std::optional<std::uint64_t> budget;
};

struct Outcome {
  int exit_code;
  std::string output;       // certificate, newline terminated
  std::string diagnostics;  // for standard error
};

std::vector<std::string_view> commands();

/// Builds the certificate for a parsed document. Throws SchemaError,
/// DomainError or InternalConsistencyError.
nlohmann::ordered_json certify(std::string_view command, const nlohmann::json& document,
                               const Flags& flags = {});

/// Parses, certifies and serialises; never throws.
Outcome run(std::string_view command, std::string_view document_text, const Flags& flags = {});

}  // namespace semistable::cli
