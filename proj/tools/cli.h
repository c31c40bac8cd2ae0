// Copyright 2026 The BAP Authors
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

// Command-line front end.
//
//   bap cointoss table|sweep|lp [flags]
//   bap gaussian table|sweep|optimize [flags]
//   bap game --game FILE (--mechanism-file FILE | --optimal) [--lambda L]
//
// Exit codes: 0 on success, 1 on evaluation or I/O errors, 2 on usage
// errors.

#ifndef BAP_TOOLS_CLI_H_
#define BAP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace bap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// "a:b:step" (inclusive of b up to rounding) or a comma-separated list.
absl::StatusOr<std::vector<double>> ParseGrid(std::string_view grid_text);

}  // namespace bap::cli

#endif  // BAP_TOOLS_CLI_H_
