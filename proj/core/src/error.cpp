// Copyright 2026 The qcx Authors
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

#include "qcx/error.hpp"

namespace qcx {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Size: return "size";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Target: return "target";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Lookup: return "lookup";
    case ErrorKind::NotUnitary: return "not-unitary";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::EmptyCandidates: return "empty-candidates";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace qcx
