// Copyright 2026 The plagdet Authors.
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

#ifndef PLAGDET_COMMON_ERROR_H_
#define PLAGDET_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace plagdet {

// Failure categories shared by every module. Each maps to one error named
// in the public contracts; the HTTP layer maps them onto status codes.
enum class ErrorCode {
  kInvalidArgument,
  kShapeMismatch,
  kDimensionMismatch,
  kRemoteUnavailable,
  kPartialResponse,
  kInsufficientVectors,
  kEmptyIndex,
  kBadPqShape,
  kCodeOutOfRange,
  kCorruptFile,
  kIoFailure,
  kEmptyDataset,
  kLabelOutOfRange,
  kEmptyMatrix,
  kEmptyQuerySet,
  kInsufficientDocuments,
  kTooFewSamples,
  kBindFailure,
  kDuplicateId,
  kNotFound,
  kConflict,
  kModelMissing,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace plagdet

#endif  // PLAGDET_COMMON_ERROR_H_
