#ifndef EVENSPIN_TOOLS_CLI_HPP
#define EVENSPIN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace evenspin::cli {

inline constexpr const char* kSchema = "evenspin-report/1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Machine-readable result of one subcommand. `payload` keys are emitted
/// after the fixed header keys, in insertion order.
struct Report {
  std::string command;
  std::string anchor;
  bool pass = true;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> tsv_header;
  std::vector<std::vector<std::string>> tsv_rows;

  nlohmann::ordered_json to_json() const;
  std::string to_tsv() const;
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evenspin::cli

#endif  // EVENSPIN_TOOLS_CLI_HPP
