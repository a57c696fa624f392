// Copyright 2026 The minring Authors
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

#ifndef MINRING_CLI_HPP_
#define MINRING_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace minring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotMinimal = 3;

// Environment override for the enumeration cap; --cap takes precedence.
inline constexpr const char* kCapEnvVar = "MINRING_ENUM_CAP";

enum class Command { kConstruct, kCheck, kVerifyLemmas, kEnumerate };
enum class OutputFormat { kText, kJson };

struct RunConfig {
  Command command = Command::kCheck;

  // Matrix source: exactly one of demo, matrix_file, ring.
  std::optional<std::string> demo;
  std::optional<std::string> matrix_file;
  std::optional<std::uint64_t> ring;

  // Block options, only meaningful with ring.
  std::string extra;
  std::string scale;
  std::string omit;
  std::size_t random_extra = 0;
  std::uint64_t seed = 0;

  OutputFormat format = OutputFormat::kText;
  std::optional<std::uint64_t> cap;
  unsigned workers = 0;
  std::optional<std::string> out_file;
};

// Parses argv and runs one command. Never throws; every failure maps to an
// exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace minring::cli

#endif  // MINRING_CLI_HPP_
