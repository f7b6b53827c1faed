#pragma once

#include <cstdint>
#include <string>

#include "blt/errors.hpp"

namespace blt {

/// Canonical residue in [0, p). All arithmetic keeps values canonical.
using Res = std::uint32_t;

/// The prime field F_p for an odd prime p.
///
/// p must be odd: the group law divides by 2, so 1/2 has to exist.
/// p is capped so that products of two residues fit comfortably in 64 bits
/// and hot loops never need wide arithmetic or allocation.
class PrimeField {
public:
    static constexpr Res max_modulus = 1u << 16;

    explicit PrimeField(Res p) : p_(p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw bad_prime("p = " + std::to_string(p) +
                            " is not an odd prime (the group law needs 1/2 mod p)");
        if (p >= max_modulus)
            throw bad_prime("p = " + std::to_string(p) + " exceeds the supported cap " +
                            std::to_string(max_modulus));
        half_ = inv(2);
    }

    Res p() const noexcept { return p_; }

    Res add(Res a, Res b) const noexcept {
        Res s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    Res sub(Res a, Res b) const noexcept { return a >= b ? a - b : a + p_ - b; }

    Res neg(Res a) const noexcept { return a == 0 ? 0 : p_ - a; }

    Res mul(Res a, Res b) const noexcept {
        return static_cast<Res>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    Res pow(Res a, std::uint64_t e) const noexcept {
        Res base = a % p_, r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse by Fermat's little theorem.
    Res inv(Res a) const {
        a %= p_;
        if (a == 0) throw zero_inverse();
        return pow(a, p_ - 2);
    }

    /// 1/2 mod p, cached for the group law.
    Res half() const noexcept { return half_; }

    /// Reduce an arbitrary signed integer to its canonical residue.
    Res from_int(long long x) const noexcept {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Res>(r);
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const noexcept { return p_ != o.p_; }

    static bool is_prime(Res n) noexcept {
        if (n < 2) return false;
        for (Res d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    Res p_;
    Res half_;
};

} // namespace blt
