// Copyright 2026 The gselc Authors
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

#include "gselc/error.h"

namespace gselc {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SelfLoop:
            return "SelfLoop";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::TooSmall:
            return "TooSmall";
        case ErrorKind::NotAnEdge:
            return "NotAnEdge";
        case ErrorKind::NotAPartition:
            return "NotAPartition";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::SizeMismatch:
            return "SizeMismatch";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::BadArity:
            return "BadArity";
        case ErrorKind::OddLength:
            return "OddLength";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace gselc
