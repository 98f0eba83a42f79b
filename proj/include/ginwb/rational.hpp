#pragma once

#include <gmpxx.h>

#include <string>

namespace ginwb {

// Exact rational coefficients. All coefficient arithmetic in the library is
// exact; there is no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace ginwb
