#pragma once

#include <gmpxx.h>

namespace thue {

/* gmpxx constructors take long, not long long; LP64 makes this a no-op cast
 * but keep it in one place. */
inline mpz_class zz(long long v) { return mpz_class(static_cast<long>(v)); }

inline mpq_class qq(long long num, long long den = 1) {
    mpq_class r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

}  // namespace thue
