#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace ontoforge::registry {

// Persistent label -> numeric id table. Ids are handed out densely from
// 1 in first-seen order and never reassigned or retired, so IRIs built
// from them survive label churn. Persistence is an `id<TAB>label` TSV
// sorted by id; a version-control diff of the file shows exactly the
// newly minted ids.
class IdRegistry {
 public:
  // Existing id for a known label, otherwise the next unused id.
  std::uint64_t mint(const std::string& label);
  std::optional<std::uint64_t> find(const std::string& label) const;
  std::size_t size() const { return by_id_.size(); }
  std::uint64_t next_id() const { return next_id_; }
  const std::map<std::uint64_t, std::string>& by_id() const { return by_id_; }

  // Throws ParseError on malformed rows, BuildError on unreadable files.
  static IdRegistry load(const std::filesystem::path& path);
  // Atomic (temp + rename). Refuses to drop or change any entry already
  // on disk; that is a registry regression, not a save.
  void save(const std::filesystem::path& path) const;

 private:
  std::map<std::string, std::uint64_t> by_label_;
  std::map<std::uint64_t, std::string> by_id_;
  std::uint64_t next_id_ = 1;
};

// Exclusive-create `<registry>.lock` marker held for the span of one
// registry-writing build. A second concurrent build fails fast instead
// of interleaving mints.
class RegistryLock {
 public:
  explicit RegistryLock(const std::filesystem::path& registry_path);
  ~RegistryLock();

  RegistryLock(RegistryLock&& other) noexcept;
  RegistryLock& operator=(RegistryLock&& other) noexcept;
  RegistryLock(const RegistryLock&) = delete;
  RegistryLock& operator=(const RegistryLock&) = delete;

  const std::filesystem::path& lock_path() const { return lock_path_; }

 private:
  void release();

  std::filesystem::path lock_path_;
  bool held_ = false;
};

}  // namespace ontoforge::registry
