#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "affconj/affconj.hpp"

namespace affconj::cli {

/// Exit-code contract of every subcommand.
enum ExitCode : int {
  kPositive = 0,  ///< conjugate / computed / self-test passed
  kNegative = 1,  ///< not conjugate / reduction impossible / self-test failed
  kUsage = 2,     ///< bad arguments, unreadable or malformed input
};

/// Malformed operator document. The message starts with the offending
/// field, e.g. "matrix[0][1]: zero denominator in '1/0'".
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"name": optional string, "matrix": n x n array, "translation": length n}
/// Entries are "p", "p/q" strings or JSON integers; floats are rejected.
struct OperatorDocument {
  std::optional<std::string> name;
  AffineOperator op;
  friend bool operator==(const OperatorDocument&, const OperatorDocument&) = default;
};

OperatorDocument parse_document(std::string_view text);
OperatorDocument load_document(const std::string& path);

nlohmann::ordered_json document_json(const OperatorDocument& doc);
std::string print_document(const OperatorDocument& doc);

nlohmann::ordered_json poly_json(const Poly& p);
/// Keys: case plus invariant_factors and fixed_point, or q_star and partition.
nlohmann::ordered_json invariant_json(const BiregularClassInvariant& inv, const std::optional<Vector>& fixed);

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affconj::cli
