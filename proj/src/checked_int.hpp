#pragma once

// Overflow-checked 128-bit integer used by the hull kernel's fast path.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace milnum::detail {

struct IntOverflow : std::overflow_error {
    IntOverflow() : std::overflow_error("128-bit overflow") {}
};

class CheckedInt {
public:
    using value_type = __int128;

    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT
    static constexpr CheckedInt raw(value_type v)
    {
        CheckedInt r;
        r.v_ = v;
        return r;
    }

    static CheckedInt from_mpz(const mpz_class& z)
    {
        // Stay well inside the range so a single product of two inputs is still checked.
        if (mpz_sizeinbase(z.get_mpz_t(), 2) > 120) throw IntOverflow();
        mpz_class a = abs(z);
        mpz_class hi = a >> 64;
        mpz_class lo = a - (hi << 64);
        auto to_u64 = [](const mpz_class& x) {
            std::uint64_t out = 0;
            mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
            return out;
        };
        value_type v = (static_cast<value_type>(to_u64(hi)) << 64) | to_u64(lo);
        return raw(sgn(z) < 0 ? -v : v);
    }

    mpz_class to_mpz() const
    {
        unsigned __int128 a = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
        std::uint64_t parts[2] = {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(a >> 64)};
        mpz_class z;
        mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, parts);
        return v_ < 0 ? mpz_class(-z) : z;
    }

    value_type value() const { return v_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b)
    {
        value_type r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw IntOverflow();
        return raw(r);
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b)
    {
        value_type r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw IntOverflow();
        return raw(r);
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b)
    {
        value_type r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw IntOverflow();
        return raw(r);
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return raw(a.v_ / b.v_); }
    friend CheckedInt operator%(CheckedInt a, CheckedInt b) { return raw(a.v_ % b.v_); }
    CheckedInt operator-() const
    {
        if (v_ == -v_ && v_ != 0) throw IntOverflow();
        return raw(-v_);
    }
    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
    CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }
    CheckedInt& operator/=(CheckedInt o) { return *this = *this / o; }

    friend auto operator<=>(CheckedInt a, CheckedInt b) = default;
    friend bool operator==(CheckedInt a, CheckedInt b) = default;

    friend int sgn(CheckedInt a) { return (a.v_ > 0) - (a.v_ < 0); }
    friend CheckedInt abs(CheckedInt a) { return a.v_ < 0 ? -a : a; }
    friend CheckedInt gcd(CheckedInt a, CheckedInt b)
    {
        value_type x = a.v_ < 0 ? -a.v_ : a.v_;
        value_type y = b.v_ < 0 ? -b.v_ : b.v_;
        while (y != 0) {
            value_type t = x % y;
            x = y;
            y = t;
        }
        return raw(x);
    }

private:
    value_type v_ = 0;
};

inline mpz_class to_mpz(const CheckedInt& v) { return v.to_mpz(); }
inline mpz_class to_mpz(const mpz_class& v) { return v; }

template <class Int>
Int from_mpz(const mpz_class& z);

template <>
inline CheckedInt from_mpz<CheckedInt>(const mpz_class& z)
{
    return CheckedInt::from_mpz(z);
}

template <>
inline mpz_class from_mpz<mpz_class>(const mpz_class& z)
{
    return z;
}

}  // namespace milnum::detail
