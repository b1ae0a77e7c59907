/*
   Copyright 2026 The tchebint authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tchebint/error.hpp"

namespace tchebint {

std::string_view to_string(Errc e) noexcept {
    switch (e) {
        case Errc::CycleDetected: return "CycleDetected";
        case Errc::NotBounded: return "NotBounded";
        case Errc::NotGraded: return "NotGraded";
        case Errc::NotTransitivelyReduced: return "NotTransitivelyReduced";
        case Errc::UnknownLabel: return "UnknownLabel";
        case Errc::DuplicateLabel: return "DuplicateLabel";
        case Errc::InvalidSize: return "InvalidSize";
        case Errc::NotAChain: return "NotAChain";
        case Errc::EndpointsNotExtreme: return "EndpointsNotExtreme";
        case Errc::TooLarge: return "TooLarge";
        case Errc::FaceNotInComplex: return "FaceNotInComplex";
        case Errc::NotAnEdgePermutation: return "NotAnEdgePermutation";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::AlphabetMismatch: return "AlphabetMismatch";
        case Errc::MissingImage: return "MissingImage";
        case Errc::NotExpressible: return "NotExpressible";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::OddEPower: return "OddEPower";
        case Errc::NotCoalgebraElement: return "NotCoalgebraElement";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace tchebint
