// Copyright 2026 The Snakedet Authors.
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

#include "snakedet/error.h"

namespace snakedet {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotDivisible:
      return "NotDivisible";
    case ErrorCode::kMissingDirection:
      return "MissingDirection";
    case ErrorCode::kNotBipartite:
      return "NotBipartite";
    case ErrorCode::kUnbalancedClasses:
      return "UnbalancedClasses";
    case ErrorCode::kOddSize:
      return "OddSize";
    case ErrorCode::kSizeCap:
      return "SizeCap";
    case ErrorCode::kSignIncoherent:
      return "SignIncoherent";
    case ErrorCode::kArcInTriangulation:
      return "ArcInTriangulation";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParse:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace snakedet
