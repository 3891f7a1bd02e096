// Copyright 2026 The QCrank Authors
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

#ifndef QCRANK_TOOLS_CLI_H
#define QCRANK_TOOLS_CLI_H

#include <ostream>

namespace qcrank::cli {

/// Environment variable naming the default output directory.
inline constexpr const char *kOutDirEnv = "QCRANK_OUT_DIR";

/// Entry point of the `qcrank` tool. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qcrank::cli

#endif
