#pragma once

#include "ncalc/sampling.hpp"

namespace testutil {

using ncalc::random_derivation;
using ncalc::random_elem;
using ncalc::random_free;

inline ncalc::Elem gen(int i) { return ncalc::Elem{{ncalc::Word{i}, ncalc::Rational(1)}}; }

}  // namespace testutil
