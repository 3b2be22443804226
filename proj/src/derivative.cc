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

#include "rederiv/derivative.h"

namespace rederiv {

Regex Derive(const Regex& e, const Symbol& a) {
  switch (e.kind()) {
    case Kind::kEmpty:
    case Kind::kEps:
      return Empty();
    case Kind::kSym:
      return e.symbol() == a ? Eps() : Empty();
    case Kind::kCat:
      return Or(Cat(Derive(e.left(), a), e.right()),
                Cat(FlagConstant(HasEps(e.left())), Derive(e.right(), a)));
    case Kind::kOr:
      return Or(Derive(e.left(), a), Derive(e.right(), a));
    case Kind::kStar:
      return Cat(Derive(e.sub(), a), e);
    case Kind::kShuffle:
      return Or(Shuffle(Derive(e.left(), a), e.right()),
                Shuffle(e.left(), Derive(e.right(), a)));
  }
  return Empty();
}

Regex DeriveWord(const Regex& e, const Trace& w) {
  Regex current = e;
  for (const Symbol& a : w) current = Derive(current, a);
  return current;
}

bool AcceptsByDerivative(const Regex& e, const Trace& w) {
  return HasEps(DeriveWord(e, w)) == EpsFlag::kEps;
}

}  // namespace rederiv
