#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coplex {

// Exact rational scalar used everywhere: graph weights, LP entries, duals.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_zero_or_one(const Rat& r) { return r == 0 || r == 1; }

// Renders "num/den", or just "num" when den == 1.
std::string rat_str(const Rat& r);

// Accepts "num" or "num/den" with optional sign; throws std::invalid_argument.
Rat parse_rat(const std::string& text);

// Exact rank of a dense rational matrix (Gaussian elimination).
int matrix_rank(std::vector<std::vector<Rat>> m);

}  // namespace coplex
