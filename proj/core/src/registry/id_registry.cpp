#include "ontoforge/registry/id_registry.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <utility>

#include "ontoforge/diagnostics.hpp"

namespace ontoforge::registry {

namespace fs = std::filesystem;

std::uint64_t IdRegistry::mint(const std::string& label) {
  auto it = by_label_.find(label);
  if (it != by_label_.end()) return it->second;
  const std::uint64_t id = next_id_++;
  by_label_.emplace(label, id);
  by_id_.emplace(id, label);
  return id;
}

std::optional<std::uint64_t> IdRegistry::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

IdRegistry IdRegistry::load(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw BuildError("cannot read id registry '" + path.string() + "'");
  }
  IdRegistry registry;
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t last_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ParseError("expected 'id<TAB>label'", line_no);
    }
    const std::string id_text = line.substr(0, tab);
    const std::string label = line.substr(tab + 1);
    std::uint64_t id = 0;
    for (char c : id_text) {
      if (c < '0' || c > '9') {
        throw ParseError("malformed id '" + id_text + "'", line_no);
      }
      id = id * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (id == 0) throw ParseError("ids start at 1", line_no);
    if (id <= last_id) {
      throw ParseError("registry ids out of order at id " + id_text, line_no);
    }
    if (registry.by_label_.count(label) != 0) {
      throw ParseError("duplicate label '" + label + "'", line_no);
    }
    last_id = id;
    registry.by_label_.emplace(label, id);
    registry.by_id_.emplace(id, label);
  }
  registry.next_id_ = last_id + 1;
  return registry;
}

void IdRegistry::save(const fs::path& path) const {
  std::error_code ec;
  if (fs::exists(path, ec)) {
    const IdRegistry on_disk = load(path);
    for (const auto& [id, label] : on_disk.by_id_) {
      auto it = by_id_.find(id);
      if (it == by_id_.end() || it->second != label) {
        throw BuildError("registry regression: id " + std::to_string(id) +
                         " ('" + label + "') is missing or changed; " +
                         "existing assignments are append-only");
      }
    }
  }

  const fs::path tmp =
      path.parent_path() /
      (path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw BuildError("cannot write id registry '" + path.string() + "'");
    }
    for (const auto& [id, label] : by_id_) {
      out << id << '\t' << label << '\n';
    }
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw BuildError("cannot write id registry '" + path.string() + "'");
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw BuildError("cannot replace id registry '" + path.string() +
                     "': " + ec.message());
  }
}

RegistryLock::RegistryLock(const fs::path& registry_path)
    : lock_path_(registry_path.string() + ".lock") {
  const int fd = ::open(lock_path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    if (errno == EEXIST) {
      throw BuildError("id registry '" + registry_path.string() +
                       "' is locked by another build; remove '" +
                       lock_path_.string() + "' if that build is gone");
    }
    throw BuildError("cannot create lock '" + lock_path_.string() +
                     "': " + std::strerror(errno));
  }
  const std::string pid = std::to_string(::getpid()) + "\n";
  // Best effort; the marker's existence is what matters.
  [[maybe_unused]] auto n = ::write(fd, pid.data(), pid.size());
  ::close(fd);
  held_ = true;
}

RegistryLock::~RegistryLock() { release(); }

RegistryLock::RegistryLock(RegistryLock&& other) noexcept
    : lock_path_(std::move(other.lock_path_)), held_(other.held_) {
  other.held_ = false;
}

RegistryLock& RegistryLock::operator=(RegistryLock&& other) noexcept {
  if (this != &other) {
    release();
    lock_path_ = std::move(other.lock_path_);
    held_ = other.held_;
    other.held_ = false;
  }
  return *this;
}

void RegistryLock::release() {
  if (held_) {
    std::error_code ec;
    fs::remove(lock_path_, ec);
    held_ = false;
  }
}

}  // namespace ontoforge::registry
