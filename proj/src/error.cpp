// Copyright 2026 The relspin Authors
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

#include "relspin/error.hpp"

namespace relspin {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::VelocityOutOfRange: return "VelocityOutOfRange";
        case ErrorCode::ZeroAxis: return "ZeroAxis";
        case ErrorCode::NotLorentz: return "NotLorentz";
        case ErrorCode::OffShell: return "OffShell";
        case ErrorCode::NonpositiveEnergy: return "NonpositiveEnergy";
        case ErrorCode::NotRotation: return "NotRotation";
        case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorCode::DegenerateField: return "DegenerateField";
        case ErrorCode::DegenerateBlock: return "DegenerateBlock";
        case ErrorCode::DegenerateCoupling: return "DegenerateCoupling";
        case ErrorCode::AxesCoincide: return "AxesCoincide";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    }
    return "Unknown";
}

}  // namespace relspin
