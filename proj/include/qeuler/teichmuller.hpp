#pragma once

#include "qeuler/padic.hpp"

namespace qeuler {

/// Teichmuller lift: the (p-1)-th root of unity congruent to a mod p, to M
/// digits. Returns the exact zero when p | a (the character convention).
Padic teichmuller(long a, long p, long precision);

/// <a> = a / omega(a), a principal unit. Throws DomainError when p | a.
Padic angle(long a, long p, long precision);

}  // namespace qeuler
