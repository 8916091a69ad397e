// Copyright 2026 The ajcgate Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ajc {

/// Base for failures rooted in the physics: a parameter regime the requested
/// protocol does not cover, a state leaving the subspace a closed form is
/// valid on, or a calibration objective that cannot be met.
class PhysicsError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class RegimeError : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

/// A state carries weight outside the doublet an operation was asked to act on.
class LeakageError : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

/// A doublet or state needs photon numbers above the configured cutoff.
class CutoffError : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

class CalibrationError : public PhysicsError {
   public:
    using PhysicsError::PhysicsError;
};

}  // namespace ajc
