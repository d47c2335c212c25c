#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

namespace ontoforge::ingest {

enum class Scheme { File, Http, Https, Inline };
enum class FetchMode { Release, Live };

const char* scheme_name(Scheme scheme);
const char* mode_name(FetchMode mode);

// Where a knowledge source lives. Release sources are local fixed
// copies (files or inline name arrays) and never touch the network;
// live sources are fetched over HTTP on every build and fail the build
// when unreachable rather than reusing stale bytes.
struct SourceLocator {
  Scheme scheme = Scheme::File;
  std::string target;  // path or URL; unused for inline sources
  FetchMode mode = FetchMode::Release;
  std::vector<std::string> inline_names;

  std::string display() const;
};

struct FetchResult {
  bool ok = false;
  int status = 0;
  std::string body;
  std::string error;
};

// Injection point for live fetches; tests substitute a recorder to prove
// release builds perform zero network activity.
class Fetcher {
 public:
  virtual ~Fetcher() = default;
  virtual FetchResult fetch(const std::string& url,
                            std::chrono::seconds timeout) = 0;
};

Fetcher& default_fetcher();

inline constexpr std::chrono::seconds kDefaultFetchTimeout{30};

struct ResolveOptions {
  std::filesystem::path base_dir;  // anchor for relative file targets
  std::chrono::seconds timeout = kDefaultFetchTimeout;
  Fetcher* fetcher = nullptr;  // null -> default_fetcher()
};

// The source's byte stream: file contents, the synthesized inline
// stream (one name per line), or the body of a live fetch. Throws
// BuildError naming the locator on any failure.
std::string resolve_source(const SourceLocator& locator,
                           const ResolveOptions& options = {});

}  // namespace ontoforge::ingest
