/*
   Copyright 2026 The flatflag Authors

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

// Umbrella header for the exact arithmetic layer.
#ifndef FLATFLAG_ALGEBRA_HPP
#define FLATFLAG_ALGEBRA_HPP

#include "flatflag/algebra/charpoly.hpp"
#include "flatflag/algebra/differential.hpp"
#include "flatflag/algebra/field.hpp"
#include "flatflag/algebra/functions.hpp"
#include "flatflag/algebra/linalg.hpp"
#include "flatflag/algebra/matrix.hpp"
#include "flatflag/algebra/poly.hpp"
#include "flatflag/algebra/ratfunc.hpp"

#endif  // FLATFLAG_ALGEBRA_HPP
