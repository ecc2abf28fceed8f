// common/error.h

// Copyright 2026 The aedadapt Authors
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

#ifndef AEDADAPT_COMMON_ERROR_H_
#define AEDADAPT_COMMON_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aedadapt {

// Failure categories. The C API status codes and the CLI exit codes are
// derived from these.
enum class ErrorKind {
  kContract,  // violated precondition or shape contract
  kDomain,    // numeric domain violation (e.g. log of a non-positive value)
  kUsage,     // bad configuration, command usage, or incompatible inputs
  kNumeric,   // NaN or divergence during optimization
  kVerify,    // a verification oracle failed
  kIo,        // filesystem or file-format problem
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

std::string shape_str(const std::vector<int>& shape);

namespace detail {
class MsgStream {
 public:
  template <typename T>
  MsgStream& operator<<(const T& v) {
    os_ << v;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};
}  // namespace detail

#define AED_THROW(kind, msg) \
  throw ::aedadapt::Error((kind), (::aedadapt::detail::MsgStream() << msg).str())

// Precondition / shape checks ("contract violation" failures).
#define AED_CHECK(cond, msg)                                \
  do {                                                      \
    if (!(cond)) AED_THROW(::aedadapt::ErrorKind::kContract, msg); \
  } while (0)

#define AED_CHECK_USAGE(cond, msg)                       \
  do {                                                   \
    if (!(cond)) AED_THROW(::aedadapt::ErrorKind::kUsage, msg); \
  } while (0)

}  // namespace aedadapt

#endif  // AEDADAPT_COMMON_ERROR_H_
