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

#include "psig/directory.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <fstream>

#include "psig/detail/hash.hpp"

namespace psig {

namespace {

constexpr uint8_t kLogVersion = 0x01;

Bytes event_record_bytes(const DirectoryEvent& e) {
  Bytes rec;
  append_u8(rec, kLogVersion);
  append_u8(rec, uint8_t(e.type));
  append_prefixed(rec, as_bytes(e.identity));
  append(rec, e.token.encode());
  append_u8(rec, e.type == DirectoryEvent::Type::revocation ? uint8_t(RecordStatus::revoked)
                                                            : uint8_t(RecordStatus::active));
  append_prefixed(rec, as_bytes(e.reason));
  append_u64be(rec, uint64_t(e.timestamp));
  return rec;
}

std::string checksum_hex(BytesView rec) {
  const auto digest = detail::sha256(rec);
  return to_hex(BytesView(digest.data(), 8));
}

}  // namespace

std::string DirectoryStore::format_line(const DirectoryEvent& e) {
  const Bytes rec = event_record_bytes(e);
  return to_hex(rec) + " " + checksum_hex(rec);
}

DirectoryEvent DirectoryStore::parse_line(std::string_view line, size_t line_no) {
  const auto fail = [&](const std::string& why) -> DirectoryEvent {
    throw CorruptLogError("directory log line " + std::to_string(line_no) + ": " + why);
  };
  const size_t sep = line.find(' ');
  if (sep == std::string_view::npos) return fail("missing checksum");
  auto rec = from_hex(line.substr(0, sep));
  if (!rec) return fail("bad hex");
  if (checksum_hex(*rec) != line.substr(sep + 1)) return fail("checksum mismatch");

  ByteReader r(*rec);
  auto version = r.u8();
  if (!version || *version != kLogVersion) return fail("unknown version");
  auto type = r.u8();
  if (!type || (*type != 1 && *type != 2)) return fail("unknown event type");
  auto identity = r.prefixed(1 << 16);
  if (!identity || identity->empty()) return fail("bad identity");
  auto token_bytes = r.take(GroupElement::kEncodedSize);
  if (!token_bytes) return fail("truncated token");
  auto token = GroupElement::decode(
      std::span<const uint8_t, GroupElement::kEncodedSize>(token_bytes->data(),
                                                           GroupElement::kEncodedSize));
  if (!token) return fail("invalid token element");
  auto status = r.u8();
  if (!status) return fail("missing status");
  auto reason = r.prefixed(1 << 16);
  auto ts = r.u64be();
  if (!reason || !ts || !r.done()) return fail("trailing or missing fields");

  DirectoryEvent e;
  e.type = DirectoryEvent::Type(*type);
  e.identity = to_string(*identity);
  e.token = *token;
  e.reason = to_string(*reason);
  e.timestamp = int64_t(*ts);
  const uint8_t expect_status = e.type == DirectoryEvent::Type::revocation
                                    ? uint8_t(RecordStatus::revoked)
                                    : uint8_t(RecordStatus::active);
  if (*status != expect_status) return fail("status inconsistent with event type");
  return e;
}

DirectoryStore DirectoryStore::open(const std::filesystem::path& path) {
  DirectoryStore store;
  store.path_ = path;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open directory log: " + path.string());
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const DirectoryEvent e = parse_line(line, line_no);
      try {
        store.check(e);
      } catch (const Error& err) {
        throw CorruptLogError("directory log line " + std::to_string(line_no) +
                              ": inconsistent event: " + err.what());
      }
      store.apply(e);
    }
  } else {
    if (const auto dir = path.parent_path(); !dir.empty())
      std::filesystem::create_directories(dir);
    std::ofstream touch(path, std::ios::app);
    if (!touch) throw IoError("cannot create directory log: " + path.string());
  }
  return store;
}

void DirectoryStore::check(const DirectoryEvent& e) const {
  const auto it = records_.find(e.identity);
  switch (e.type) {
    case DirectoryEvent::Type::issuance:
      if (it != records_.end()) throw ConflictError("identity already has a registration record");
      break;
    case DirectoryEvent::Type::revocation:
      if (it == records_.end()) throw NotFoundError();
      if (!it->second.active()) throw AlreadyRevokedError();
      break;
  }
}

void DirectoryStore::apply(const DirectoryEvent& e) {
  switch (e.type) {
    case DirectoryEvent::Type::issuance: {
      RegistrationRecord rec;
      rec.identity = e.identity;
      rec.token = e.token;
      rec.status = RecordStatus::active;
      rec.issued_at = e.timestamp;
      records_.emplace(e.identity, std::move(rec));
      break;
    }
    case DirectoryEvent::Type::revocation: {
      auto& rec = records_.at(e.identity);
      rec.status = RecordStatus::revoked;
      rec.revoked_reason = e.reason;
      rec.revoked_at = e.timestamp;
      break;
    }
  }
}

void DirectoryStore::append(const DirectoryEvent& event) {
  std::unique_lock lk(mu_);
  check(event);
  if (path_) {
    const std::string line = format_line(event) + "\n";
    const int fd = ::open(path_->c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
    if (fd < 0) throw IoError("cannot open directory log for append");
    const ssize_t n = ::write(fd, line.data(), line.size());
    const bool synced = n == ssize_t(line.size()) && ::fsync(fd) == 0;
    ::close(fd);
    if (!synced) throw IoError("directory log append failed");
  }
  apply(event);
}

DirectoryStore::RecordMap DirectoryStore::snapshot() const {
  std::shared_lock lk(mu_);
  return records_;
}

std::optional<RegistrationRecord> DirectoryStore::lookup(const std::string& identity) const {
  std::shared_lock lk(mu_);
  const auto it = records_.find(identity);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

size_t DirectoryStore::size() const {
  std::shared_lock lk(mu_);
  return records_.size();
}

}  // namespace psig
