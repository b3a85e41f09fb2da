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
//
// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criterion 9 drives the installed CLI binary; pass its path via the
// PSIG_CLI environment variable or --cli.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "psig/keystore.hpp"
#include "psig/threats.hpp"
#include "psig/wire.hpp"
#include "test_helpers.hpp"

namespace fs = std::filesystem;
using namespace psig;
using namespace psig::test;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// --- criterion 1: end-to-end correctness chain ------------------------------

void criterion_1() {
  const auto t0 = clock_type::now();
  SeededEntropy rng(1001);
  int ok_count = 0;
  for (int i = 0; i < 50; ++i) {
    Deployment dep(rng);
    const std::string orig_id = "orig" + std::to_string(i) + "@accept";
    const std::string prox_id = "prox" + std::to_string(i) + "@accept";
    const auto orig = dep.enroll(orig_id);
    const auto prox = dep.enroll(prox_id);

    std::array<uint8_t, 6> wbytes;
    rng.fill(wbytes);
    const Warrant w = make_warrant(orig_id, prox_id, BytesView(wbytes.data(), 3));
    const Delegation d = create_delegation(orig.key, w, prox.key.public_key, dep.params);
    const ProxyKey pk = derive_proxy_key(d, prox.key, orig.record, dep.params);

    Bytes msg(wbytes.begin(), wbytes.begin() + 3);
    std::array<uint8_t, 24> tail;
    rng.fill(tail);
    append(msg, tail);
    const ProxySignature sig = proxy_sign(pk, msg, rng, kNow, dep.params);
    if (verify_proxy_signature(sig, orig.record, prox.record, dep.params,
                               RevocationPolicy::strict, kNow) == VerifyStatus::ok)
      ++ok_count;
  }
  const double secs = seconds_since(t0);
  std::ostringstream detail;
  detail << ok_count << "/50 lifecycles verified in " << secs << " s";
  report(1, "correctness chain over 50 randomized lifecycles", ok_count == 50 && secs < 30.0,
         detail.str());
}

// --- criterion 2: KeyGen equation suite --------------------------------------

void criterion_2() {
  SeededEntropy rng(1002);
  Deployment dep(rng);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const std::string id = "kg" + std::to_string(i) + "@accept";
    const BindingFactors f{Scalar::random_nonzero(rng), Scalar::random_nonzero(rng)};
    const BindingParameters bp = binding_parameters_from_factors(id, dep.params.suite_id, f);
    if (!check_binding_parameters(bp, dep.params)) ++failures;

    const GroupElement d = bp.y.mul(dep.master.s);
    const GroupElement reg = bp.z.mul(dep.master.s);
    if (pairing(d, dep.params.generator) != pairing(bp.y, dep.params.pkg_public_key)) ++failures;
    if (pairing(reg, dep.params.generator) != pairing(bp.z, dep.params.pkg_public_key))
      ++failures;

    const SignerKey key = unblind(d, f, id, dep.params.suite_id);
    if (pairing(key.private_key, dep.params.generator) != pairing(key.public_key, reg))
      ++failures;
  }
  report(2, "KeyGen equations over 100 random binding factor pairs", failures == 0,
         std::to_string(failures) + " failures");
}

// --- criterion 3: delegation check -------------------------------------------

void criterion_3() {
  SeededEntropy rng(1003);
  Deployment dep(rng);
  const auto orig = dep.enroll("orig@accept3");
  const auto prox = dep.enroll("prox@accept3");
  int misclassified = 0;

  for (int i = 0; i < 100; ++i) {
    std::array<uint8_t, 4> noise;
    rng.fill(noise);
    const Warrant w = make_warrant("orig@accept3", "prox@accept3", noise);
    const Delegation d = create_delegation(orig.key, w, prox.key.public_key, dep.params);
    if (!validate_delegation(d, orig.record, dep.params)) ++misclassified;

    // one single-field perturbation per honest delegation, cycling the field
    Delegation bad = d;
    switch (i % 4) {
      case 0: bad.u_o = bad.u_o + random_element(rng); break;
      case 1: bad.psi_o = bad.psi_o + random_element(rng); break;
      case 2: bad.warrant.message_qualification.push_back(0x7f); break;
      case 3: bad.pub_o = bad.pub_o + random_element(rng); break;
    }
    if (validate_delegation(bad, orig.record, dep.params)) ++misclassified;
  }
  report(3, "delegation equation: 100 honest accepted, 100 perturbed rejected",
         misclassified == 0, std::to_string(misclassified) + " misclassifications");
}

// --- criterion 4: signature tamper matrix -------------------------------------

void criterion_4() {
  SeededEntropy rng(1004);
  Deployment dep(rng);
  const auto orig = dep.enroll("orig@accept4");
  const auto prox = dep.enroll("prox@accept4");
  const Warrant w = make_warrant("orig@accept4", "prox@accept4");
  const Delegation d = create_delegation(orig.key, w, prox.key.public_key, dep.params);
  const ProxyKey pk = derive_proxy_key(d, prox.key, orig.record, dep.params);

  int accepted = 0, total = 0;
  for (int field = 0; field < 8; ++field) {
    for (int t = 0; t < 20; ++t) {
      const Bytes msg = to_bytes("tamper matrix message " + std::to_string(t));
      ProxySignature sig = proxy_sign(pk, msg, rng, kNow, dep.params);
      switch (field) {
        case 0: {  // warrant bytes
          std::array<uint8_t, 2> b;
          rng.fill(b);
          sig.warrant.message_qualification.push_back(b[0]);
          break;
        }
        case 1:  // message
          sig.message.push_back(0x00);
          break;
        case 2: sig.r_point = sig.r_point + random_element(rng); break;
        case 3: sig.v = sig.v + random_element(rng); break;
        case 4: sig.psi_o = sig.psi_o + random_element(rng); break;
        case 5: sig.psi_p = sig.psi_p + random_element(rng); break;
        case 6: sig.pub_o = sig.pub_o + random_element(rng); break;
        case 7: sig.pub_p = sig.pub_p + random_element(rng); break;
      }
      ++total;
      if (verify_proxy_signature(sig, orig.record, prox.record, dep.params,
                                 RevocationPolicy::strict, kNow) == VerifyStatus::ok)
        ++accepted;
    }
  }
  report(4, "signature tamper matrix 160/160 rejections", accepted == 0 && total == 160,
         std::to_string(total - accepted) + "/" + std::to_string(total) + " rejected");
}

// --- criterion 5: revocation --------------------------------------------------

void criterion_5() {
  SeededEntropy rng(1005);
  bool ok = true;
  std::string detail;

  // honest request: validates, revokes both, strict verification flips
  {
    Deployment dep(rng);
    const auto orig = dep.enroll("orig@accept5");
    const auto prox = dep.enroll("prox@accept5");
    const Warrant w = make_warrant("orig@accept5", "prox@accept5");
    const Delegation d = create_delegation(orig.key, w, prox.key.public_key, dep.params);
    const ProxyKey pk = derive_proxy_key(d, prox.key, orig.record, dep.params);
    const ProxySignature sig = proxy_sign(pk, to_bytes("m"), rng, kNow, dep.params);

    const RevokeRequest req = create_revoke_request(orig.key, w, as_bytes("done"), dep.params);
    try {
      process_revoke_request(req, dep.directory, dep.params, kNow);
    } catch (const Error&) {
      ok = false;
      detail = "honest revoke request rejected";
    }
    const auto rec_o = lookup_registration("orig@accept5", dep.directory);
    const auto rec_p = lookup_registration("prox@accept5", dep.directory);
    if (rec_o.active() || rec_p.active()) {
      ok = false;
      detail = "records not revoked";
    }
    if (verify_proxy_signature(sig, rec_o, rec_p, dep.params, RevocationPolicy::strict, kNow) !=
        VerifyStatus::revoked_signer) {
      ok = false;
      detail = "strict verification did not report revoked-signer";
    }
  }

  // Tamper matrix over the fields the validation equation binds (M_r, Rev,
  // Pub_o, Pub_p, psi_o), 20 trials each, plus substitution of the
  // warrant's proxy identity, which is bound through the Pub_p
  // recomputation. The warrant's window and qualification do not enter the
  // revoke equation and are not part of the matrix.
  int accepted = 0;
  {
    Deployment dep(rng);
    const auto orig = dep.enroll("orig@accept5t");
    const auto prox = dep.enroll("prox@accept5t");
    dep.enroll("bystander@accept5t");
    const Warrant w = make_warrant("orig@accept5t", "prox@accept5t");
    const RevokeRequest honest = create_revoke_request(orig.key, w, as_bytes("r"), dep.params);

    for (int field = 0; field < 6; ++field) {
      for (int t = 0; t < 20; ++t) {
        RevokeRequest req = honest;
        switch (field) {
          case 0: req.m_r.push_back(uint8_t(t)); break;
          case 1: req.warrant.proxy_identity = "bystander@accept5t"; break;  // m_w identity
          case 2: req.rev = req.rev + random_element(rng); break;
          case 3: req.pub_o = req.pub_o + random_element(rng); break;
          case 4: req.pub_p = req.pub_p + random_element(rng); break;
          case 5: req.psi_o = req.psi_o + random_element(rng); break;
        }
        try {
          process_revoke_request(req, dep.directory, dep.params, kNow);
          ++accepted;  // tampered request must never be accepted
        } catch (const Error&) {
        }
      }
    }
    if (accepted != 0) {
      ok = false;
      detail = std::to_string(accepted) + " tampered requests accepted";
    }
  }
  report(5, "revocation: honest accepted, both records flipped, 120 tampered rejected", ok,
         detail);
}

// --- criterion 6: threat suite --------------------------------------------------

void criterion_6() {
  ScenarioConfig cfg;
  cfg.registration_trials = 20;
  cfg.interception_trials = 100;
  cfg.mutation_trials = 20;
  cfg.oracle_queries = 20;
  cfg.seed = 42;

  const auto first = run_all_scenarios(cfg);
  const auto second = run_all_scenarios(cfg);  // reproducibility under the same seed

  bool ok = first.size() == 4;
  std::string detail;
  for (size_t i = 0; i < first.size(); ++i) {
    std::cout << "    " << first[i].to_line() << std::endl;
    if (!first[i].passed()) {
      ok = false;
      detail = first[i].scenario_name + " failed";
    }
    if (first[i].to_line() != second[i].to_line()) {
      ok = false;
      detail = first[i].scenario_name + " not reproducible";
    }
  }
  report(6, "threat suite: four scenarios, zero failures, seeded reproducible", ok, detail);
}

// --- criterion 7: pairing-core property suite ------------------------------------

void criterion_7() {
  SeededEntropy rng(1007);
  int failures = 0;

  const GtElement g = pairing(GroupElement::generator(), GroupElement::generator());
  if (g.is_identity()) ++failures;  // non-degeneracy

  for (int i = 0; i < 100; ++i) {
    const Scalar x = Scalar::random(rng), y = Scalar::random(rng);
    if (pairing(GroupElement::generator_mul(x), GroupElement::generator_mul(y)) != g.pow(x * y))
      ++failures;  // bilinearity
    const GroupElement a = random_element(rng), b = random_element(rng);
    if (pairing(a, b) != pairing(b, a)) ++failures;  // symmetry
  }

  for (int i = 0; i < 1000; ++i) {
    const GroupElement p = random_element(rng);
    const auto dec = GroupElement::decode(p.encode());
    if (!dec || *dec != p) ++failures;

    auto enc = p.encode();
    std::array<uint8_t, 2> pick;
    rng.fill(pick);
    uint8_t mask = 0;
    while (mask == 0) rng.fill(std::span<uint8_t>(&mask, 1));
    enc[(size_t(pick[0]) << 8 | pick[1]) % enc.size()] ^= mask;
    const auto mutated = GroupElement::decode(enc);
    if (mutated && *mutated != p) ++failures;  // mutated encodings must not smuggle elements

    const Scalar s = Scalar::random(rng);
    const auto sdec = Scalar::decode(s.encode());
    if (!sdec || *sdec != s) ++failures;
  }

  report(7, "pairing-core properties: bilinearity, symmetry, non-degeneracy, codecs",
         failures == 0, std::to_string(failures) + " failures");
}

// --- criterion 8: no-secure-channel audit ------------------------------------------

void criterion_8() {
  SeededEntropy rng(1008);
  const fs::path root = fs::temp_directory_path() / "psig-acceptance-audit";
  fs::remove_all(root);
  fs::create_directories(root);

  // Scripted lifecycle through the same wire formats the CLI uses, writing
  // every exchanged and local file under `root`.
  DirectoryStore directory = DirectoryStore::open(root / "directory.log");
  auto [params, master] = setup(kSuiteId, rng);
  ConfirmationRegistry confirmations;
  write_file(root / "params.psig", params.encode());
  write_container_file(root / "pkg.master.key", encode_master_payload(master), "passphrase", rng);

  struct Actor {
    BindingFactors factors;
    SignerKey key;
  };
  std::vector<Actor> actors;
  for (const std::string id : {"orig@audit", "prox@audit"}) {
    auto [factors, bp] = make_binding_parameters(id, params.suite_id, rng);
    const auto token = confirmations.begin(id, rng, kNow);
    BindingRequestFile brf;
    brf.bp = bp;
    brf.confirmation_nonce = token.nonce;
    write_file(root / (id + ".binding"), encode_binding_request(params.suite_id, brf));
    write_container_file(root / (id + ".pending"),
                         encode_pending_payload(params.suite_id, {id, factors}), "passphrase",
                         rng);

    const auto issue = issue_partial_key(bp, token, confirmations, master, directory, kNow);
    write_file(root / (id + ".partial"), encode_partial_key(params.suite_id, {id, issue.d}));

    const SignerKey key = unblind(issue.d, factors, id, params.suite_id);
    write_container_file(root / (id + ".key"), encode_signer_payload(params.suite_id, key),
                         "passphrase", rng);
    actors.push_back({factors, key});
  }
  write_file(root / "confirmations.bin", confirmations.serialize());

  const Warrant w = make_warrant("orig@audit", "prox@audit");
  write_file(root / "warrant.psig", encode_warrant_file(params.suite_id, w));
  const Delegation d = create_delegation(actors[0].key, w, actors[1].key.public_key, params);
  write_file(root / "delegation.psig", encode_delegation(params.suite_id, d));
  const ProxyKey pk =
      derive_proxy_key(d, actors[1].key, *directory.lookup("orig@audit"), params);
  write_container_file(root / "proxy.key", encode_proxy_key_payload(params.suite_id, pk),
                       "passphrase", rng);
  const ProxySignature sig = proxy_sign(pk, as_bytes("audited message"), rng, kNow, params);
  write_file(root / "message.sig", encode_signature(params.suite_id, sig));
  const RevokeRequest req = create_revoke_request(actors[0].key, w, as_bytes("end"), params);
  write_file(root / "revoke.psig", encode_revoke_request(params.suite_id, req));
  process_revoke_request(req, directory, params, kNow);

  // The secrets whose encodings must appear in no file at all.
  std::vector<std::pair<std::string, Bytes>> secrets;
  secrets.emplace_back("master s", Bytes(master.s.encode().begin(), master.s.encode().end()));
  for (size_t i = 0; i < actors.size(); ++i) {
    const auto tag = std::to_string(i);
    const auto a = actors[i].factors.a.encode();
    const auto b = actors[i].factors.b.encode();
    const auto s = actors[i].key.private_key.encode();
    secrets.emplace_back("a[" + tag + "]", Bytes(a.begin(), a.end()));
    secrets.emplace_back("b[" + tag + "]", Bytes(b.begin(), b.end()));
    secrets.emplace_back("S[" + tag + "]", Bytes(s.begin(), s.end()));
  }
  // V_p is signing-capable key material too.
  const auto vp = pk.v_p.encode();
  secrets.emplace_back("V_p", Bytes(vp.begin(), vp.end()));

  int scanned = 0, leaks = 0;
  std::string detail;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    ++scanned;
    const Bytes content = read_file(entry.path());
    for (const auto& [name, enc] : secrets) {
      if (contains_bytes(content, enc)) {
        ++leaks;
        detail = name + " found in " + entry.path().filename().string();
      }
    }
  }
  fs::remove_all(root);
  report(8, "no-secure-channel audit over every lifecycle file", scanned >= 12 && leaks == 0,
         detail.empty() ? std::to_string(scanned) + " files scanned" : detail);
}

// --- criterion 9: CLI lifecycle ------------------------------------------------------

struct CliRunner {
  fs::path cli;
  fs::path dir;
  fs::path log;

  int run(const std::string& args) const {
    const std::string cmd = "cd " + dir.string() + " && PSIG_HOME=home PSIG_PASSPHRASE=accept " +
                            cli.string() + " --now 1700000000 " + args + " >> " + log.string() +
                            " 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
};

void criterion_9(const std::string& cli_path) {
  if (cli_path.empty()) {
    report(9, "CLI lifecycle", false, "CLI binary path not provided (set PSIG_CLI or --cli)");
    return;
  }
  const auto t0 = clock_type::now();
  CliRunner cli{fs::absolute(cli_path), fs::temp_directory_path() / "psig-acceptance-cli",
                fs::temp_directory_path() / "psig-acceptance-cli" / "cli.log"};
  fs::remove_all(cli.dir);
  fs::create_directories(cli.dir);
  std::ofstream(cli.log) << "";

  bool ok = true;
  std::string detail;
  const auto step = [&](const std::string& args, int expect = 0) {
    if (!ok) return;
    const int rc = cli.run(args);
    if (rc != expect) {
      ok = false;
      detail = "step `" + args + "` exited " + std::to_string(rc) + " (want " +
               std::to_string(expect) + ")";
    }
  };

  step("--seed 1 pkg setup");
  step("--seed 2 pkg confirm orig@cli --out confirm_o.json");
  step("--seed 3 pkg confirm prox@cli --out confirm_p.json");

  const auto nonce_from = [&](const std::string& file) -> std::string {
    const Bytes b = read_file(cli.dir / file);
    const std::string text(b.begin(), b.end());
    const auto pos = text.find("\"nonce\": \"");
    return pos == std::string::npos ? "" : text.substr(pos + 10, 64);
  };
  const std::string nonce_o = nonce_from("confirm_o.json");
  const std::string nonce_p = nonce_from("confirm_p.json");
  if (nonce_o.size() != 64 || nonce_p.size() != 64) {
    ok = false;
    detail = "could not extract confirmation nonces";
  }

  step("--seed 4 signer request orig@cli --confirm " + nonce_o + " --file orig.binding");
  step("pkg issue orig.binding --file orig.partial");
  step("signer finalize orig@cli orig.partial");
  step("--seed 5 signer request prox@cli --confirm " + nonce_p + " --file prox.binding");
  step("pkg issue prox.binding --file prox.partial");
  step("signer finalize prox@cli prox.partial");
  step("warrant new --original orig@cli --proxy prox@cli --prefix report: --from 1699999000 "
       "--until 1700009000 --file warrant.psig");
  step("delegate warrant.psig --signer orig@cli --file delegation.psig");
  step("accept-delegation delegation.psig --signer prox@cli");
  if (ok) write_file(cli.dir / "message.txt", as_bytes("report: all quiet"));
  step("--seed 6 proxy-sign message.txt --signer prox@cli --warrant warrant.psig "
       "--file message.sig");
  step("verify message.sig --policy strict");

  // tampered signature file must exit 1
  if (ok) {
    Bytes sig = read_file(cli.dir / "message.sig");
    sig[sig.size() - 40] ^= 0x01;
    write_file(cli.dir / "tampered.sig", sig);
    step("verify tampered.sig", 1);
  }
  // and an unknown subcommand must exit 2
  step("frobnicate", 2);

  const double secs = seconds_since(t0);
  if (ok && secs >= 10.0) {
    ok = false;
    detail = "lifecycle took " + std::to_string(secs) + " s";
  }
  if (ok) fs::remove_all(cli.dir);
  std::ostringstream d2;
  d2 << detail << (detail.empty() ? "" : "; ") << secs << " s";
  report(9, "CLI lifecycle exits 0, tampered signature exits 1", ok, d2.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = std::getenv("PSIG_CLI") ? std::getenv("PSIG_CLI") : "";
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9(cli_path);

  if (g_failures == 0)
    std::cout << "acceptance: all 9 criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
