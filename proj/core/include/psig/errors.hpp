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

#ifndef PSIG_ERRORS_HPP
#define PSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PSIG_DEFINE_ERROR(Name, default_msg)          \
  struct Name : Error {                               \
    Name() : Error(default_msg) {}                    \
    explicit Name(const std::string& m) : Error(m) {} \
  }

PSIG_DEFINE_ERROR(UnsupportedSuiteError, "unsupported suite");
PSIG_DEFINE_ERROR(MalformedElementError, "malformed group element");
PSIG_DEFINE_ERROR(InverseOfZeroError, "inverse of zero scalar");

PSIG_DEFINE_ERROR(IdentityAlreadyRegisteredError, "identity already registered");
PSIG_DEFINE_ERROR(BindingCheckFailedError, "binding parameter check failed");
PSIG_DEFINE_ERROR(ConfirmationInvalidError, "confirmation token invalid");
PSIG_DEFINE_ERROR(NotFoundError, "identity not found in directory");
PSIG_DEFINE_ERROR(InvalidRevokeSignatureError, "revoke request validation failed");
PSIG_DEFINE_ERROR(UnknownIdentityError, "revoke request names an unknown identity");
PSIG_DEFINE_ERROR(AlreadyRevokedError, "registration already revoked");

PSIG_DEFINE_ERROR(ConflictError, "directory conflict");
PSIG_DEFINE_ERROR(IoError, "i/o failure");
PSIG_DEFINE_ERROR(CorruptLogError, "directory log corrupt");

PSIG_DEFINE_ERROR(IdentityMismatchError, "identity mismatch");
PSIG_DEFINE_ERROR(InvalidDelegationError, "delegation validation failed");
PSIG_DEFINE_ERROR(WarrantViolationError, "message or time outside warrant");
PSIG_DEFINE_ERROR(RevokedDelegatorError, "delegator registration revoked");

PSIG_DEFINE_ERROR(KeystoreError, "keystore unreadable (bad passphrase or corrupt file)");
PSIG_DEFINE_ERROR(DecodeError, "malformed protocol message");

#undef PSIG_DEFINE_ERROR

}  // namespace psig

#endif  // PSIG_ERRORS_HPP
