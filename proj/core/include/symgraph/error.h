// Copyright 2026 The SymGraph Authors
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

#ifndef SYMGRAPH_ERROR_H_
#define SYMGRAPH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace symgraph {

enum class ErrorCode {
  kInvalidArgument,
  kGenerationInfeasible,
  kGenerationRetryExhausted,
  kIo,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. The code
// lets callers distinguish "bad input" from "the sampler gave up".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void ThrowInvalidArgument(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kGenerationInfeasible:
      return "generation-infeasible";
    case ErrorCode::kGenerationRetryExhausted:
      return "generation-retry-exhausted";
    case ErrorCode::kIo:
      return "io-error";
    case ErrorCode::kParse:
      return "parse-error";
  }
  return "unknown";
}

}  // namespace symgraph

#endif  // SYMGRAPH_ERROR_H_
