// Copyright 2026 The ffdioph Authors
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

#ifndef FFDIOPH_CLI_HPP_
#define FFDIOPH_CLI_HPP_

namespace ffdioph {

// Command-line entry point.  Exit codes: 0 success, 1 usage or input error,
// 2 resource exhaustion (enumeration budget or precision), 3 a --check run
// whose report contains a failing check.
int CliMain(int argc, char** argv);

}  // namespace ffdioph

#endif  // FFDIOPH_CLI_HPP_
