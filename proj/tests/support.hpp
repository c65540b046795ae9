#pragma once

#include "doctest.h"
#include "kpd/error.hpp"
#include "kpd/matrix.hpp"

// Fails unless `expr` throws kpd::Error carrying `errc`.
#define CHECK_ERRC(expr, errc)                                              \
    do {                                                                    \
        bool thrown_ = false;                                               \
        try {                                                               \
            (void)(expr);                                                   \
        } catch (const kpd::Error& e_) {                                    \
            thrown_ = true;                                                 \
            CHECK_MESSAGE(e_.code() == (errc), "wrong code: " << e_.what()); \
        }                                                                   \
        CHECK_MESSAGE(thrown_, "no kpd::Error from " #expr);                \
    } while (0)

namespace testing_support {

inline kpd::Field rat() { return kpd::Field::rational(); }
inline kpd::Field gf(std::uint32_t p) { return kpd::Field::prime(p); }
inline kpd::Field c64() { return kpd::Field::complex64(); }

inline kpd::Scalar q(long num, long den = 1) { return kpd::Scalar(kpd::Rational(mpz_class(num), mpz_class(den))); }

inline kpd::Matrix ints(const kpd::Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
    return kpd::Matrix::from_ints(f, rows);
}

}  // namespace testing_support
