// Copyright 2026 The jlcs Authors.
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


#ifndef JLCS_CLI_H_
#define JLCS_CLI_H_

// Batch command-line front end.
//
// Exit codes: 0 every check passed, 1 a verification failed, 2 usage or
// validation error, 3 budget or precision abort.

#include <ostream>

namespace jlcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAbort = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jlcs::cli

#endif  // JLCS_CLI_H_
