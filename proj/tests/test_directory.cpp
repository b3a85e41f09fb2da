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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <atomic>
#include <thread>

#include <filesystem>
#include <fstream>

#include "test_helpers.hpp"

using namespace psig;
using namespace psig::test;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("psig-dir-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

DirectoryEvent issuance_event(const std::string& id, EntropySource& rng, int64_t ts = kNow) {
  DirectoryEvent e;
  e.type = DirectoryEvent::Type::issuance;
  e.identity = id;
  e.token = random_element(rng);
  e.timestamp = ts;
  return e;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("write then load round-trips records") {
  TempDir tmp;
  SeededEntropy rng(1);
  const fs::path log = tmp.path / "directory.log";

  auto store = DirectoryStore::open(log);
  const auto ev = issuance_event("alice@x", rng);
  store.append(ev);

  auto reloaded = DirectoryStore::open(log);
  const auto rec = reloaded.lookup("alice@x");
  REQUIRE(rec);
  CHECK(rec->active());
  CHECK(rec->token == ev.token);
  CHECK(rec->issued_at == kNow);
}

TEST_CASE("duplicate issuance conflicts, in memory and on load") {
  TempDir tmp;
  SeededEntropy rng(2);
  auto store = DirectoryStore::open(tmp.path / "d.log");
  store.append(issuance_event("alice@x", rng));
  CHECK_THROWS_AS(store.append(issuance_event("alice@x", rng)), ConflictError);
  CHECK(store.size() == 1);

  // a log with a conflicting event is corrupt
  std::ofstream out(tmp.path / "d.log", std::ios::app);
  out << DirectoryStore::format_line(issuance_event("alice@x", rng)) << "\n";
  out.close();
  CHECK_THROWS_AS(DirectoryStore::open(tmp.path / "d.log"), CorruptLogError);
}

TEST_CASE("a corrupted line is detected and named on load") {
  TempDir tmp;
  SeededEntropy rng(3);
  const fs::path log = tmp.path / "d.log";
  {
    auto store = DirectoryStore::open(log);
    store.append(issuance_event("alice@x", rng));
    store.append(issuance_event("bob@x", rng));
  }
  std::string text = read_text(log);
  // flip one hex digit inside line 2's record
  const size_t line2 = text.find('\n') + 10;
  text[line2] = text[line2] == 'a' ? 'b' : 'a';
  std::ofstream(log, std::ios::trunc) << text;

  try {
    DirectoryStore::open(log);
    FAIL("expected CorruptLogError");
  } catch (const CorruptLogError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("snapshots are isolated from later appends") {
  SeededEntropy rng(4);
  DirectoryStore store;  // in-memory
  store.append(issuance_event("alice@x", rng));
  const auto snap = store.snapshot();

  DirectoryEvent rev;
  rev.type = DirectoryEvent::Type::revocation;
  rev.identity = "alice@x";
  rev.token = snap.at("alice@x").token;
  rev.reason = "done";
  rev.timestamp = kNow + 5;
  store.append(rev);

  CHECK(snap.at("alice@x").status == RecordStatus::active);
  CHECK(store.lookup("alice@x")->status == RecordStatus::revoked);
  CHECK(store.lookup("alice@x")->revoked_reason == "done");

  CHECK(DirectoryStore().snapshot().empty());
}

TEST_CASE("snapshot after N issuances has N records") {
  SeededEntropy rng(5);
  DirectoryStore store;
  for (int i = 0; i < 17; ++i) store.append(issuance_event("u" + std::to_string(i), rng));
  CHECK(store.snapshot().size() == 17);
}

TEST_CASE("log replay is deterministic and re-serialization is byte-identical") {
  TempDir tmp;
  SeededEntropy rng(6);
  const fs::path log = tmp.path / "d.log";
  {
    auto store = DirectoryStore::open(log);
    store.append(issuance_event("alice@x", rng, kNow));
    store.append(issuance_event("bob@x", rng, kNow + 1));
    DirectoryEvent rev;
    rev.type = DirectoryEvent::Type::revocation;
    rev.identity = "alice@x";
    rev.token = store.lookup("alice@x")->token;
    rev.reason = "alice@x;bye";
    rev.timestamp = kNow + 2;
    store.append(rev);
  }
  const std::string original = read_text(log);

  // re-serialize what a replay sees, line by line
  std::string rebuilt;
  size_t line_no = 0;
  std::istringstream in(original);
  for (std::string line; std::getline(in, line);) {
    const DirectoryEvent e = DirectoryStore::parse_line(line, ++line_no);
    rebuilt += DirectoryStore::format_line(e) + "\n";
  }
  CHECK(rebuilt == original);

  const auto a = DirectoryStore::open(log).snapshot();
  const auto b = DirectoryStore::open(log).snapshot();
  CHECK(a.size() == b.size());
  for (const auto& [id, rec] : a) {
    CHECK(b.at(id).token == rec.token);
    CHECK(b.at(id).status == rec.status);
  }
}

TEST_CASE("snapshot readers run concurrently with the single writer") {
  SeededEntropy rng(8);
  DirectoryStore store;
  constexpr int kEvents = 40;

  std::vector<DirectoryEvent> events;
  for (int i = 0; i < kEvents; ++i) events.push_back(issuance_event("u" + std::to_string(i), rng));

  std::atomic<bool> done{false};
  std::atomic<int> bad_snapshots{0};
  std::vector<std::thread> readers;
  for (int t = 0; t < 3; ++t) {
    readers.emplace_back([&] {
      while (!done.load()) {
        const auto snap = store.snapshot();
        // every observed record map is a consistent prefix of the appends
        if (snap.size() > kEvents) bad_snapshots.fetch_add(1);
        for (const auto& [id, rec] : snap)
          if (!rec.active()) bad_snapshots.fetch_add(1);
      }
    });
  }
  for (const auto& e : events) store.append(e);
  done.store(true);
  for (auto& r : readers) r.join();

  CHECK(bad_snapshots.load() == 0);
  CHECK(store.size() == kEvents);
}

TEST_CASE("truncation at any line boundary yields a loadable prefix") {
  TempDir tmp;
  SeededEntropy rng(7);
  const fs::path log = tmp.path / "d.log";
  {
    auto store = DirectoryStore::open(log);
    for (int i = 0; i < 5; ++i) store.append(issuance_event("u" + std::to_string(i), rng));
  }
  const std::string original = read_text(log);

  std::vector<size_t> boundaries;
  for (size_t i = 0; i < original.size(); ++i)
    if (original[i] == '\n') boundaries.push_back(i + 1);

  for (size_t i = 0; i < boundaries.size(); ++i) {
    std::ofstream(log, std::ios::trunc) << original.substr(0, boundaries[i]);
    auto store = DirectoryStore::open(log);
    CHECK(store.size() == i + 1);
  }
}
