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
// psig: every protocol role (pkg, signer, delegator, proxy, verifier,
// threat harness) as file-driven subcommands. Roles communicate only
// through the emitted message files; secrets stay in passphrase-sealed
// per-role key stores under the home directory.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <functional>
#include <memory>

#include "psig/detail/hash.hpp"
#include "psig/directory.hpp"
#include "psig/keystore.hpp"
#include "psig/pkg.hpp"
#include "psig/threats.hpp"
#include "psig/wire.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace psig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Ctx {
  fs::path home;
  std::string suite{kSuiteId};
  std::string passphrase;
  std::optional<uint64_t> seed;
  std::optional<int64_t> now_override;
  std::string out_path;

  json report;
  std::unique_ptr<EntropySource> rng_;

  EntropySource& rng() {
    if (!rng_) {
      if (seed)
        rng_ = std::make_unique<SeededEntropy>(*seed);
      else
        rng_ = std::make_unique<SystemEntropy>();
    }
    return *rng_;
  }

  int64_t now() const {
    if (now_override) return *now_override;
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  }

  fs::path params_path() const { return home / "params.psig"; }
  fs::path directory_path() const { return home / "directory.log"; }
  fs::path master_path() const { return home / "pkg" / "master.key"; }
  fs::path confirmations_path() const { return home / "pkg" / "confirmations.bin"; }

  static std::string id_tag(std::string_view identity) {
    const auto digest = detail::sha256(as_bytes(identity));
    return to_hex(BytesView(digest.data(), 8));
  }

  fs::path signer_key_path(std::string_view id) const {
    return home / "signers" / (id_tag(id) + ".key");
  }
  fs::path pending_path(std::string_view id) const {
    return home / "signers" / (id_tag(id) + ".pending");
  }
  fs::path proxy_key_path(std::string_view id, const Warrant& w) const {
    const auto wdigest = detail::sha256(w.encode());
    return home / "proxykeys" /
           (id_tag(id) + "-" + to_hex(BytesView(wdigest.data(), 8)) + ".key");
  }

  SystemParams load_params() const {
    auto p = SystemParams::decode(read_file(params_path()));
    if (!p) throw DecodeError("invalid params file: " + params_path().string());
    if (p->suite_id != suite) throw UnsupportedSuiteError("params file uses a different suite");
    return *p;
  }

  MasterKey load_master() {
    return decode_master_payload(read_container_file(master_path(), passphrase));
  }

  ConfirmationRegistry load_confirmations() const {
    if (!fs::exists(confirmations_path())) return {};
    return ConfirmationRegistry::deserialize(read_file(confirmations_path()));
  }
  void save_confirmations(const ConfirmationRegistry& reg) const {
    write_file(confirmations_path(), reg.serialize());
  }

  SignerKey load_signer(std::string_view id) {
    return decode_signer_payload(suite, read_container_file(signer_key_path(id), passphrase));
  }
};

// Ensures the JSON report gets written even on failure paths.
void write_report(Ctx& ctx, bool ok, const std::string& message) {
  if (ctx.out_path.empty()) return;
  ctx.report["ok"] = ok;
  ctx.report["message"] = message;
  const std::string text = ctx.report.dump(2) + "\n";
  write_file(ctx.out_path, as_bytes(text));
}

int succeed(Ctx& ctx, const std::string& message) {
  std::cout << "ok: " << message << "\n";
  write_report(ctx, true, message);
  return kExitOk;
}

int fail(Ctx& ctx, const std::string& message) {
  std::cout << "error: " << message << "\n";
  write_report(ctx, false, message);
  return kExitFailure;
}

// --- pkg ---------------------------------------------------------------------

int cmd_pkg_setup(Ctx& ctx) {
  ctx.report["command"] = "pkg setup";
  if (fs::exists(ctx.master_path())) return fail(ctx, "master key already exists");
  auto [params, master] = setup(ctx.suite, ctx.rng());
  write_file(ctx.params_path(), params.encode());
  write_container_file(ctx.master_path(), encode_master_payload(master), ctx.passphrase,
                       ctx.rng());
  DirectoryStore::open(ctx.directory_path());
  ctx.report["params_file"] = ctx.params_path().string();
  return succeed(ctx, "system parameters published at " + ctx.params_path().string());
}

int cmd_pkg_confirm(Ctx& ctx, const std::string& identity) {
  ctx.report["command"] = "pkg confirm";
  auto reg = ctx.load_confirmations();
  const ConfirmationToken token = reg.begin(identity, ctx.rng(), ctx.now());
  ctx.save_confirmations(reg);
  const std::string nonce_hex = to_hex(token.nonce);
  // stands in for the out-of-band mailbox delivery
  std::cout << "confirmation-token: " << nonce_hex << " expires=" << token.expiry << "\n";
  ctx.report["nonce"] = nonce_hex;
  ctx.report["expiry"] = token.expiry;
  return succeed(ctx, "confirmation issued for " + identity);
}

int cmd_pkg_issue(Ctx& ctx, const std::string& binding_file, std::string out_file) {
  ctx.report["command"] = "pkg issue";
  const BindingRequestFile req = decode_binding_request(ctx.suite, read_file(binding_file));
  const MasterKey master = ctx.load_master();
  auto confirmations = ctx.load_confirmations();
  DirectoryStore directory = DirectoryStore::open(ctx.directory_path());

  ConfirmationToken token;
  token.identity = req.bp.identity;
  token.nonce = req.confirmation_nonce;
  token.expiry = 0;  // the registry holds the authoritative expiry
  const PartialKeyIssue issue =
      issue_partial_key(req.bp, token, confirmations, master, directory, ctx.now());
  ctx.save_confirmations(confirmations);

  if (out_file.empty()) out_file = Ctx::id_tag(req.bp.identity) + ".partial";
  write_file(out_file, encode_partial_key(ctx.suite, {req.bp.identity, issue.d}));
  ctx.report["partial_key_file"] = out_file;
  ctx.report["identity"] = req.bp.identity;
  return succeed(ctx, "partial key for " + req.bp.identity + " written to " + out_file);
}

int cmd_pkg_lookup(Ctx& ctx, const std::string& identity) {
  ctx.report["command"] = "pkg lookup";
  const DirectoryStore directory = DirectoryStore::open(ctx.directory_path());
  const RegistrationRecord rec = lookup_registration(identity, directory);
  const std::string status = rec.active() ? "active" : "revoked";
  ctx.report["identity"] = rec.identity;
  ctx.report["status"] = status;
  ctx.report["token"] = to_hex(rec.token.encode());
  if (!rec.active()) ctx.report["revoked_reason"] = rec.revoked_reason;
  return succeed(ctx, identity + " is " + status);
}

int cmd_pkg_revoke(Ctx& ctx, const std::string& request_file) {
  ctx.report["command"] = "pkg revoke";
  const RevokeRequest req = decode_revoke_request(ctx.suite, read_file(request_file));
  const SystemParams params = ctx.load_params();
  DirectoryStore directory = DirectoryStore::open(ctx.directory_path());
  const RevocationResult res = process_revoke_request(req, directory, params, ctx.now());
  ctx.report["revoked"] = {res.original_identity, res.proxy_identity};
  return succeed(ctx, "revoked " + res.original_identity + " and " + res.proxy_identity);
}

// --- signer ------------------------------------------------------------------

int cmd_signer_request(Ctx& ctx, const std::string& identity, const std::string& nonce_hex,
                       std::string out_file) {
  ctx.report["command"] = "signer request";
  const auto nonce = from_hex(nonce_hex);
  if (!nonce || nonce->size() != 32) throw DecodeError("confirmation nonce must be 32 hex bytes");

  auto [factors, bp] = make_binding_parameters(identity, ctx.suite, ctx.rng());
  write_container_file(ctx.pending_path(identity),
                       encode_pending_payload(ctx.suite, {identity, factors}), ctx.passphrase,
                       ctx.rng());

  BindingRequestFile f;
  f.bp = bp;
  std::copy(nonce->begin(), nonce->end(), f.confirmation_nonce.begin());
  if (out_file.empty()) out_file = Ctx::id_tag(identity) + ".binding";
  write_file(out_file, encode_binding_request(ctx.suite, f));
  ctx.report["binding_file"] = out_file;
  return succeed(ctx, "binding request for " + identity + " written to " + out_file);
}

int cmd_signer_finalize(Ctx& ctx, const std::string& identity, const std::string& partial_file) {
  ctx.report["command"] = "signer finalize";
  const SystemParams params = ctx.load_params();
  const PartialKeyFile pk = decode_partial_key(ctx.suite, read_file(partial_file));
  if (pk.identity != identity) throw IdentityMismatchError("partial key is for " + pk.identity);

  const PendingRequest pending = decode_pending_payload(
      ctx.suite, read_container_file(ctx.pending_path(identity), ctx.passphrase));
  const BindingParameters bp =
      binding_parameters_from_factors(identity, ctx.suite, pending.factors);
  if (!validate_partial_key(pk.d, bp, params))
    return fail(ctx, "partial key failed the issuance check e(D,P) = e(Y,Pub_PKG)");

  const SignerKey key = unblind(pk.d, pending.factors, identity, ctx.suite);
  write_container_file(ctx.signer_key_path(identity), encode_signer_payload(ctx.suite, key),
                       ctx.passphrase, ctx.rng());
  fs::remove(ctx.pending_path(identity));  // binding factor a is gone for good
  ctx.report["key_file"] = ctx.signer_key_path(identity).string();
  return succeed(ctx, "signer key for " + identity + " stored");
}

// --- warrant / delegation / signing -------------------------------------------

int cmd_warrant_new(Ctx& ctx, const std::string& original, const std::string& proxy,
                    const std::string& prefix, int64_t from, int64_t until,
                    std::string out_file) {
  ctx.report["command"] = "warrant new";
  Warrant w;
  w.original_identity = original;
  w.proxy_identity = proxy;
  w.message_qualification = to_bytes(prefix);
  w.valid_from = from;
  w.valid_until = until;
  if (!w.well_formed()) throw Error("malformed warrant (empty identity or bad window)");
  if (out_file.empty()) out_file = "warrant.psig";
  write_file(out_file, encode_warrant_file(ctx.suite, w));
  ctx.report["warrant_file"] = out_file;
  return succeed(ctx, "warrant written to " + out_file);
}

int cmd_delegate(Ctx& ctx, const std::string& warrant_file, const std::string& signer_id,
                 std::string out_file) {
  ctx.report["command"] = "delegate";
  const SystemParams params = ctx.load_params();
  const Warrant w = decode_warrant_file(ctx.suite, read_file(warrant_file));
  const SignerKey ok = ctx.load_signer(signer_id);
  const GroupElement pub_p = hash_to_group_h2(ctx.suite, as_bytes(w.proxy_identity));
  const Delegation d = create_delegation(ok, w, pub_p, params);
  if (out_file.empty()) out_file = "delegation.psig";
  write_file(out_file, encode_delegation(ctx.suite, d));
  ctx.report["delegation_file"] = out_file;
  return succeed(ctx, "delegation for " + w.proxy_identity + " written to " + out_file);
}

int cmd_accept_delegation(Ctx& ctx, const std::string& delegation_file,
                          const std::string& signer_id) {
  ctx.report["command"] = "accept-delegation";
  const SystemParams params = ctx.load_params();
  const Delegation d = decode_delegation(ctx.suite, read_file(delegation_file));
  const SignerKey pk = ctx.load_signer(signer_id);
  const DirectoryStore directory = DirectoryStore::open(ctx.directory_path());
  const RegistrationRecord reg_o = lookup_registration(d.warrant.original_identity, directory);
  const ProxyKey key = derive_proxy_key(d, pk, reg_o, params);
  const fs::path path = ctx.proxy_key_path(signer_id, d.warrant);
  write_container_file(path, encode_proxy_key_payload(ctx.suite, key), ctx.passphrase, ctx.rng());
  ctx.report["proxy_key_file"] = path.string();
  return succeed(ctx, "delegation accepted; proxy key stored");
}

int cmd_proxy_sign(Ctx& ctx, const std::string& message_file, const std::string& signer_id,
                   const std::string& warrant_file, std::string out_file) {
  ctx.report["command"] = "proxy-sign";
  const SystemParams params = ctx.load_params();
  const Warrant w = decode_warrant_file(ctx.suite, read_file(warrant_file));
  const Bytes message = read_file(message_file);
  const ProxyKey key = decode_proxy_key_payload(
      ctx.suite, read_container_file(ctx.proxy_key_path(signer_id, w), ctx.passphrase));
  const ProxySignature sig = proxy_sign(key, message, ctx.rng(), ctx.now(), params);
  if (out_file.empty()) out_file = message_file + ".sig";
  write_file(out_file, encode_signature(ctx.suite, sig));
  ctx.report["signature_file"] = out_file;
  return succeed(ctx, "proxy signature written to " + out_file);
}

int cmd_verify(Ctx& ctx, const std::string& signature_file, const std::string& policy_name) {
  ctx.report["command"] = "verify";
  const SystemParams params = ctx.load_params();
  const ProxySignature sig = decode_signature(ctx.suite, read_file(signature_file));
  const DirectoryStore directory = DirectoryStore::open(ctx.directory_path());
  const RegistrationRecord reg_o = lookup_registration(sig.warrant.original_identity, directory);
  const RegistrationRecord reg_p = lookup_registration(sig.warrant.proxy_identity, directory);
  const RevocationPolicy policy =
      policy_name == "lenient" ? RevocationPolicy::lenient : RevocationPolicy::strict;
  const VerifyStatus status = verify_proxy_signature(sig, reg_o, reg_p, params, policy, ctx.now());
  ctx.report["status"] = to_string(status);
  if (status != VerifyStatus::ok)
    return fail(ctx, std::string("verification failed: ") + to_string(status));
  return succeed(ctx, "signature valid under warrant of " + sig.warrant.original_identity);
}

int cmd_revoke(Ctx& ctx, const std::string& warrant_file, const std::string& signer_id,
               const std::string& reason, std::string out_file) {
  ctx.report["command"] = "revoke";
  const SystemParams params = ctx.load_params();
  const Warrant w = decode_warrant_file(ctx.suite, read_file(warrant_file));
  const SignerKey ok = ctx.load_signer(signer_id);
  const RevokeRequest req = create_revoke_request(ok, w, as_bytes(reason), params);
  if (out_file.empty()) out_file = "revoke-request.psig";
  write_file(out_file, encode_revoke_request(ctx.suite, req));
  ctx.report["revoke_request_file"] = out_file;
  return succeed(ctx, "revoke request written to " + out_file);
}

// --- threats --------------------------------------------------------------------

int cmd_threats_run(Ctx& ctx, const std::string& scenario, int trials, uint64_t seed) {
  ctx.report["command"] = "threats run";
  ScenarioConfig cfg;
  cfg.seed = seed;
  if (trials > 0) {
    cfg.registration_trials = cfg.mutation_trials = cfg.oracle_queries = trials;
    cfg.interception_trials = trials;
  }
  std::vector<ScenarioReport> reports;
  if (scenario.empty()) {
    reports = run_all_scenarios(cfg);
  } else if (scenario == "registration-replacement") {
    reports.push_back(run_registration_replacement_scenario(cfg.registration_trials, cfg.seed));
  } else if (scenario == "interception") {
    reports.push_back(run_interception_scenario(cfg.interception_trials, cfg.seed + 1));
  } else if (scenario == "key-mutation") {
    reports.push_back(run_key_mutation_scenario(cfg.mutation_trials, cfg.seed + 2));
  } else if (scenario == "adaptive-oracle-game") {
    reports.push_back(run_adaptive_oracle_game(cfg.oracle_queries, cfg.seed + 3));
  } else {
    throw Error("unknown scenario: " + scenario);
  }

  bool all_ok = true;
  json lines = json::array();
  for (const auto& r : reports) {
    std::cout << r.to_line() << "\n";
    lines.push_back({{"scenario", r.scenario_name},
                     {"trials", r.trials},
                     {"failures", r.observed_failures},
                     {"passed", r.passed()}});
    all_ok = all_ok && r.passed();
  }
  ctx.report["scenarios"] = lines;
  if (!all_ok) return fail(ctx, "threat scenario failures observed");
  return succeed(ctx, "all scenarios passed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairing-based proxy-protected proxy signatures with revocation"};
  app.require_subcommand(1);

  Ctx ctx;
  std::string home_str = [] {
    const char* env = std::getenv("PSIG_HOME");
    return env ? std::string(env) : std::string("psig-home");
  }();
  ctx.passphrase = [] {
    const char* env = std::getenv("PSIG_PASSPHRASE");
    return env ? std::string(env) : std::string();
  }();

  app.add_option("--home", home_str, "role home directory (default $PSIG_HOME or ./psig-home)");
  app.add_option("--suite", ctx.suite, "cryptographic suite id");
  app.add_option("--passphrase", ctx.passphrase, "key store passphrase (or $PSIG_PASSPHRASE)");
  uint64_t seed_opt = 0;
  auto* seed_flag = app.add_option("--seed", seed_opt, "deterministic entropy seed (tests)");
  int64_t now_opt = 0;
  auto* now_flag = app.add_option("--now", now_opt, "override the clock (unix seconds)");
  app.add_option("--out", ctx.out_path, "write a machine-readable JSON outcome file");

  // pkg
  auto* pkg = app.add_subcommand("pkg", "private key generator role");
  pkg->require_subcommand(1);
  pkg->add_subcommand("setup", "generate params and master key");
  std::string confirm_id;
  pkg->add_subcommand("confirm", "issue an identity confirmation token")
      ->add_option("identity", confirm_id)
      ->required();
  std::string issue_file, issue_out;
  auto* pkg_issue =
      pkg->add_subcommand("issue", "validate a binding request and issue a partial key");
  pkg_issue->add_option("binding-file", issue_file)->required();
  pkg_issue->add_option("--file", issue_out, "partial key output path");
  std::string lookup_id;
  pkg->add_subcommand("lookup", "look up a registration record")
      ->add_option("identity", lookup_id)
      ->required();
  std::string pkg_revoke_file;
  pkg->add_subcommand("revoke", "process a revoke request")
      ->add_option("request-file", pkg_revoke_file)
      ->required();

  // signer
  auto* signer = app.add_subcommand("signer", "signer-side key lifecycle");
  signer->require_subcommand(1);
  std::string req_id, req_nonce, req_out;
  auto* signer_request = signer->add_subcommand("request", "emit a blinded key issuance request");
  signer_request->add_option("identity", req_id)->required();
  signer_request->add_option("--confirm", req_nonce, "confirmation token nonce (hex)")->required();
  signer_request->add_option("--file", req_out, "binding request output path");
  std::string fin_id, fin_file;
  auto* signer_finalize = signer->add_subcommand("finalize", "validate and unblind a partial key");
  signer_finalize->add_option("identity", fin_id)->required();
  signer_finalize->add_option("partial-key-file", fin_file)->required();

  // warrant
  auto* warrant = app.add_subcommand("warrant", "warrant plumbing");
  warrant->require_subcommand(1);
  std::string w_orig, w_proxy, w_prefix, w_out;
  int64_t w_from = 0, w_until = 0;
  auto* warrant_new = warrant->add_subcommand("new", "write a warrant file");
  warrant_new->add_option("--original", w_orig)->required();
  warrant_new->add_option("--proxy", w_proxy)->required();
  warrant_new->add_option("--prefix", w_prefix, "message qualification prefix");
  warrant_new->add_option("--from", w_from, "validity start (unix)")->required();
  warrant_new->add_option("--until", w_until, "validity end (unix)")->required();
  warrant_new->add_option("--file", w_out, "output path");

  // delegation / signing / verification / revocation
  std::string del_warrant, del_signer, del_out;
  auto* delegate = app.add_subcommand("delegate", "create a delegation from a warrant");
  delegate->add_option("warrant-file", del_warrant)->required();
  delegate->add_option("--signer", del_signer, "original signer identity")->required();
  delegate->add_option("--file", del_out, "delegation output path");

  std::string acc_file, acc_signer;
  auto* accept =
      app.add_subcommand("accept-delegation", "validate a delegation and derive the proxy key");
  accept->add_option("delegation-file", acc_file)->required();
  accept->add_option("--signer", acc_signer, "proxy signer identity")->required();

  std::string ps_message, ps_signer, ps_warrant, ps_out;
  auto* psign = app.add_subcommand("proxy-sign", "sign a message file under a warrant");
  psign->add_option("message-file", ps_message)->required();
  psign->add_option("--signer", ps_signer, "proxy signer identity")->required();
  psign->add_option("--warrant", ps_warrant, "warrant file")->required();
  psign->add_option("--file", ps_out, "signature output path");

  std::string v_file, v_policy = "strict";
  auto* verify_cmd = app.add_subcommand("verify", "verify a proxy signature file");
  verify_cmd->add_option("signature-file", v_file)->required();
  verify_cmd->add_option("--policy", v_policy, "strict|lenient")
      ->check(CLI::IsMember({"strict", "lenient"}));

  std::string rv_warrant, rv_signer, rv_reason, rv_out;
  auto* revoke_cmd = app.add_subcommand("revoke", "build a revoke request for a warrant");
  revoke_cmd->add_option("warrant-file", rv_warrant)->required();
  revoke_cmd->add_option("--signer", rv_signer, "original signer identity")->required();
  revoke_cmd->add_option("--reason", rv_reason)->required();
  revoke_cmd->add_option("--file", rv_out, "revoke request output path");

  // threats
  auto* threats = app.add_subcommand("threats", "adversarial scenario harness");
  threats->require_subcommand(1);
  std::string t_scenario;
  int t_trials = 0;
  uint64_t t_seed = 1;
  auto* threats_run = threats->add_subcommand("run", "run threat scenarios");
  threats_run->add_option(
      "--scenario", t_scenario,
      "registration-replacement|interception|key-mutation|adaptive-oracle-game");
  threats_run->add_option("--trials", t_trials, "trial count (default per scenario)");
  threats_run->add_option("--seed", t_seed, "scenario seed");

  // Let globals like --out / --seed appear after the subcommand too.
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* sub : a->get_subcommands([](const CLI::App*) { return true; }))
      enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ctx.home = fs::path(home_str);
  if (seed_flag->count()) ctx.seed = seed_opt;
  if (now_flag->count()) ctx.now_override = now_opt;

  try {
    if (ctx.suite != kSuiteId) throw UnsupportedSuiteError("unknown suite: " + ctx.suite);
    if (pkg->got_subcommand("setup")) return cmd_pkg_setup(ctx);
    if (pkg->got_subcommand("confirm")) return cmd_pkg_confirm(ctx, confirm_id);
    if (pkg->got_subcommand("issue")) return cmd_pkg_issue(ctx, issue_file, issue_out);
    if (pkg->got_subcommand("lookup")) return cmd_pkg_lookup(ctx, lookup_id);
    if (pkg->got_subcommand("revoke")) return cmd_pkg_revoke(ctx, pkg_revoke_file);
    if (signer->got_subcommand("request"))
      return cmd_signer_request(ctx, req_id, req_nonce, req_out);
    if (signer->got_subcommand("finalize")) return cmd_signer_finalize(ctx, fin_id, fin_file);
    if (warrant->got_subcommand("new"))
      return cmd_warrant_new(ctx, w_orig, w_proxy, w_prefix, w_from, w_until, w_out);
    if (*delegate) return cmd_delegate(ctx, del_warrant, del_signer, del_out);
    if (*accept) return cmd_accept_delegation(ctx, acc_file, acc_signer);
    if (*psign) return cmd_proxy_sign(ctx, ps_message, ps_signer, ps_warrant, ps_out);
    if (*verify_cmd) return cmd_verify(ctx, v_file, v_policy);
    if (*revoke_cmd) return cmd_revoke(ctx, rv_warrant, rv_signer, rv_reason, rv_out);
    if (threats->got_subcommand("run")) return cmd_threats_run(ctx, t_scenario, t_trials, t_seed);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const Error& e) {
    return fail(ctx, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, std::string("unexpected: ") + e.what());
  }
}
