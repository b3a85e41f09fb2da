// Copyright 2026 The psig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSIG_DIRECTORY_HPP
#define PSIG_DIRECTORY_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "psig/pairing_core.hpp"

namespace psig {

enum class RecordStatus : uint8_t { active = 0, revoked = 1 };

// One row of the PKG public directory: the published (Reg, ID) pair plus
// revocation state. Revoked records persist; an identity is never reusable.
struct RegistrationRecord {
  std::string identity;
  GroupElement token;  // Reg = s * Z
  RecordStatus status = RecordStatus::active;
  std::string revoked_reason;
  int64_t issued_at = 0;
  int64_t revoked_at = 0;

  bool active() const { return status == RecordStatus::active; }
};

struct DirectoryEvent {
  enum class Type : uint8_t { issuance = 1, revocation = 2 };
  Type type;
  std::string identity;
  GroupElement token;  // issuance: the new Reg; revocation: the existing Reg
  std::string reason;  // revocation only
  int64_t timestamp = 0;
};

// Append-only event log with one hex-encoded, checksummed record per line.
// Replay of the log is the only way state is produced, so the same file
// always yields the same record map. Single writer (the PKG), shared
// readers.
class DirectoryStore {
 public:
  using RecordMap = std::map<std::string, RegistrationRecord>;

  DirectoryStore() = default;  // in-memory store

  // Opens (creating if needed) a persistent store, replaying and verifying
  // the existing log. Throws CorruptLogError naming the offending line.
  static DirectoryStore open(const std::filesystem::path& path);

  // Validates the event against the uniqueness invariant, appends it
  // durably (when persistent) and applies it. Throws ConflictError on a
  // duplicate issuance, NotFoundError / AlreadyRevokedError for bad
  // revocation events, IoError on write failure.
  void append(const DirectoryEvent& event);

  RecordMap snapshot() const;
  std::optional<RegistrationRecord> lookup(const std::string& identity) const;
  size_t size() const;

  const std::optional<std::filesystem::path>& path() const { return path_; }

  // Serialized log line for an event (without the trailing newline);
  // exposed for tests and tooling.
  static std::string format_line(const DirectoryEvent& event);
  static DirectoryEvent parse_line(std::string_view line, size_t line_no);

 private:
  void apply(const DirectoryEvent& event);
  void check(const DirectoryEvent& event) const;

  RecordMap records_;
  std::optional<std::filesystem::path> path_;
  mutable std::shared_mutex mu_;

 public:
  DirectoryStore(DirectoryStore&& o) noexcept
      : records_(std::move(o.records_)), path_(std::move(o.path_)) {}
  DirectoryStore& operator=(DirectoryStore&& o) noexcept {
    records_ = std::move(o.records_);
    path_ = std::move(o.path_);
    return *this;
  }
};

}  // namespace psig

#endif  // PSIG_DIRECTORY_HPP
