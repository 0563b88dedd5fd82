// Copyright 2026 The identlab Authors. All Rights Reserved.
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


#ifndef IDENTLAB_CLI_HPP_
#define IDENTLAB_CLI_HPP_

#include <ostream>

namespace identlab {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDimension = 3;
inline constexpr int kExitNumerical = 4;

// Entry point of the identlab tool. Documents go to `out`, diagnostics to
// `err`; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace identlab

#endif  // IDENTLAB_CLI_HPP_
