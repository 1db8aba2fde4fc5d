// Copyright 2026 The Agora Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agora {

enum class ErrorCode {
  // domain-core
  DuplicateHandle,
  TermsNotAccepted,
  NotModerator,
  DuplicateTitle,
  UnknownCommunity,
  UnknownDiscussion,
  UnknownPost,
  UnknownUser,
  UnknownAttachment,
  EmptyPost,
  EmptyComment,
  EmptyMessage,
  AttachmentTooLarge,
  UnsupportedAttachmentKind,
  AlreadyLiked,
  UnknownRecipient,
  FieldTooLarge,
  InvalidArgument,
  // gamification
  LevelOutOfRange,
  OutOfOrderEvent,
  // surveys
  NotCommunityModerator,
  BadOptionCount,
  DuplicateOptions,
  SurveyClosed,
  AlreadyAnswered,
  OptionOutOfRange,
  UnknownSurvey,
  AlreadyClosed,
  // research-export
  NotAdministrator,
  EmptyTermDocument,
  NotAuthorizedResearcher,
  InvalidRange,
  UnknownKind,
  // api-service
  BadCredentials,
  Unauthenticated,
  Forbidden,
  BadCursor,
  LimitOutOfRange,
  UnknownField,
  NotFound,
  MethodNotAllowed,
  BadRequest,
  NotAcceptable,
  // store
  StoreFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Error raised by every module operation. The code is the contract; the
/// message is for humans.
class Error : public std::runtime_error {
 public:
  explicit Error(ErrorCode code);
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace agora
