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

#ifndef FLATFLAG_HITCHIN_HPP
#define FLATFLAG_HITCHIN_HPP

#include "flatflag/hitchin/certificate.hpp"
#include "flatflag/hitchin/chart.hpp"
#include "flatflag/hitchin/nilflag.hpp"

#endif  // FLATFLAG_HITCHIN_HPP
