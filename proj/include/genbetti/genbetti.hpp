/*
   Copyright 2026 The genbetti authors

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

#pragma once

#include "betti.hpp"
#include "hilbert.hpp"
#include "koszul.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "render.hpp"

// json_io.hpp is intentionally not pulled in here: it needs the vendored
// nlohmann/json header, which library consumers may not have on their path.
