// Copyright 2026 The qsemigroup Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qsemigroup/error.hpp"

namespace qsemigroup {

const char *to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::TargetTooLarge: return "TargetTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::FieldOverflow: return "FieldOverflow";
    case ErrorKind::SweepTooLarge: return "SweepTooLarge";
    case ErrorKind::TooManyQubits: return "TooManyQubits";
    case ErrorKind::NoSolutions: return "NoSolutions";
    case ErrorKind::CollectionTimeout: return "CollectionTimeout";
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyFile: return "EmptyFile";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace qsemigroup
