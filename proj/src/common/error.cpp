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

#include "agora/common/error.hpp"

namespace agora {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateHandle: return "DuplicateHandle";
    case ErrorCode::TermsNotAccepted: return "TermsNotAccepted";
    case ErrorCode::NotModerator: return "NotModerator";
    case ErrorCode::DuplicateTitle: return "DuplicateTitle";
    case ErrorCode::UnknownCommunity: return "UnknownCommunity";
    case ErrorCode::UnknownDiscussion: return "UnknownDiscussion";
    case ErrorCode::UnknownPost: return "UnknownPost";
    case ErrorCode::UnknownUser: return "UnknownUser";
    case ErrorCode::UnknownAttachment: return "UnknownAttachment";
    case ErrorCode::EmptyPost: return "EmptyPost";
    case ErrorCode::EmptyComment: return "EmptyComment";
    case ErrorCode::EmptyMessage: return "EmptyMessage";
    case ErrorCode::AttachmentTooLarge: return "AttachmentTooLarge";
    case ErrorCode::UnsupportedAttachmentKind: return "UnsupportedAttachmentKind";
    case ErrorCode::AlreadyLiked: return "AlreadyLiked";
    case ErrorCode::UnknownRecipient: return "UnknownRecipient";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::OutOfOrderEvent: return "OutOfOrderEvent";
    case ErrorCode::NotCommunityModerator: return "NotCommunityModerator";
    case ErrorCode::BadOptionCount: return "BadOptionCount";
    case ErrorCode::DuplicateOptions: return "DuplicateOptions";
    case ErrorCode::SurveyClosed: return "SurveyClosed";
    case ErrorCode::AlreadyAnswered: return "AlreadyAnswered";
    case ErrorCode::OptionOutOfRange: return "OptionOutOfRange";
    case ErrorCode::UnknownSurvey: return "UnknownSurvey";
    case ErrorCode::AlreadyClosed: return "AlreadyClosed";
    case ErrorCode::NotAdministrator: return "NotAdministrator";
    case ErrorCode::EmptyTermDocument: return "EmptyTermDocument";
    case ErrorCode::NotAuthorizedResearcher: return "NotAuthorizedResearcher";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::BadCredentials: return "BadCredentials";
    case ErrorCode::Unauthenticated: return "Unauthenticated";
    case ErrorCode::Forbidden: return "Forbidden";
    case ErrorCode::BadCursor: return "BadCursor";
    case ErrorCode::LimitOutOfRange: return "LimitOutOfRange";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MethodNotAllowed: return "MethodNotAllowed";
    case ErrorCode::BadRequest: return "BadRequest";
    case ErrorCode::NotAcceptable: return "NotAcceptable";
    case ErrorCode::StoreFailure: return "StoreFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code)
    : std::runtime_error(std::string(to_string(code))), code_(code) {}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

}  // namespace agora
