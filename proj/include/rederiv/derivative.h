// Copyright 2026 The Rederiv Authors. All Rights Reserved.
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

#ifndef REDERIV_DERIVATIVE_H_
#define REDERIV_DERIVATIVE_H_

#include "rederiv/regex.h"

namespace rederiv {

// The unique Brzozowski derivative of e with respect to a. The result is the
// raw syntactic derivative: the concatenation rule always produces
// "e0' e1 + f e1'" with f the literal constant eps or 0, and nothing is
// simplified afterwards.
Regex Derive(const Regex& e, const Symbol& a);

// Left fold of Derive over w. DeriveWord(e, {}) == e.
Regex DeriveWord(const Regex& e, const Trace& w);

bool AcceptsByDerivative(const Regex& e, const Trace& w);

}  // namespace rederiv

#endif  // REDERIV_DERIVATIVE_H_
