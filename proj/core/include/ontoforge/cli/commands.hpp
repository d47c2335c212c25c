#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace ontoforge::cli {

// Stable scripting contract.
enum ExitStatus : int {
  kOk = 0,
  kBuildFailed = 1,
  kWarningsAsErrors = 2,
  kUsageError = 3,
};

struct CommonFlags {
  bool fail_on_warnings = false;
  std::optional<std::string> registry_path;  // --ids
  std::optional<std::string> mode_override;  // "release" or "live"
};

int cmd_build(const std::string& manifest_path, const std::string& out_path,
              const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& manifest_path, const CommonFlags& flags,
              std::ostream& out, std::ostream& err);
int cmd_stats(const std::string& manifest_path, const CommonFlags& flags,
              std::ostream& out, std::ostream& err);
int cmd_diff(const std::string& old_path, const std::string& new_path,
             std::ostream& out, std::ostream& err);

// argv-level entry point shared by the binary and in-process tests.
int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace ontoforge::cli
