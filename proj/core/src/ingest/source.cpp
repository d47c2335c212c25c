#include "ontoforge/ingest/source.hpp"

#ifdef ONTOFORGE_HAVE_TLS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <fstream>
#include <sstream>

#include "ontoforge/diagnostics.hpp"

namespace ontoforge::ingest {

namespace fs = std::filesystem;

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::File:
      return "file";
    case Scheme::Http:
      return "http";
    case Scheme::Https:
      return "https";
    case Scheme::Inline:
      return "inline";
  }
  return "";
}

const char* mode_name(FetchMode mode) {
  return mode == FetchMode::Release ? "release" : "live";
}

std::string SourceLocator::display() const {
  if (scheme == Scheme::Inline) {
    return "(inline: " + std::to_string(inline_names.size()) + " names)";
  }
  return target;
}

namespace {

class HttpFetcher final : public Fetcher {
 public:
  FetchResult fetch(const std::string& url,
                    std::chrono::seconds timeout) override {
#ifndef ONTOFORGE_HAVE_TLS
    if (url.rfind("https://", 0) == 0) {
      return {false, 0, {}, "built without TLS support"};
    }
#endif
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
      return {false, 0, {}, "malformed URL"};
    }
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string base =
        path_start == std::string::npos ? url : url.substr(0, path_start);
    const std::string path =
        path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(base);
    client.set_connection_timeout(timeout.count(), 0);
    client.set_read_timeout(timeout.count(), 0);
    client.set_follow_location(true);

    auto res = client.Get(path);
    if (!res) {
      return {false, 0, {}, httplib::to_string(res.error())};
    }
    return {true, res->status, res->body, {}};
  }
};

std::string read_file_bytes(const fs::path& path, const SourceLocator& loc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw BuildError("cannot read source '" + loc.display() +
                     "' (resolved to '" + path.string() + "')");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw BuildError("i/o error reading source '" + loc.display() + "'");
  }
  return std::move(buffer).str();
}

}  // namespace

Fetcher& default_fetcher() {
  static HttpFetcher fetcher;
  return fetcher;
}

std::string resolve_source(const SourceLocator& locator,
                           const ResolveOptions& options) {
  switch (locator.scheme) {
    case Scheme::Inline: {
      std::string out;
      for (const auto& name : locator.inline_names) {
        out += name;
        out += '\n';
      }
      return out;
    }
    case Scheme::File: {
      fs::path path = locator.target;
      if (path.is_relative() && !options.base_dir.empty()) {
        path = options.base_dir / path;
      }
      return read_file_bytes(path, locator);
    }
    case Scheme::Http:
    case Scheme::Https: {
      // Release builds must be reproducible from local bytes alone.
      if (locator.mode != FetchMode::Live) {
        throw BuildError("network source '" + locator.display() +
                         "' is not allowed in release mode");
      }
      Fetcher& fetcher =
          options.fetcher != nullptr ? *options.fetcher : default_fetcher();
      const FetchResult result = fetcher.fetch(locator.target, options.timeout);
      if (!result.ok) {
        throw BuildError("live fetch failed for '" + locator.display() +
                         "': " + result.error);
      }
      if (result.status < 200 || result.status >= 300) {
        throw BuildError("live fetch for '" + locator.display() +
                         "' returned HTTP " + std::to_string(result.status));
      }
      return result.body;
    }
  }
  throw BuildError("unhandled source scheme");
}

}  // namespace ontoforge::ingest
