#pragma once

#include <gmpxx.h>

namespace mccool {

using Integer = mpz_class;
using Rational = mpq_class;

}  // namespace mccool
