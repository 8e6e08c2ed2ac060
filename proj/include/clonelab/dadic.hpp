#pragma once

#include "clonelab/bigint.hpp"
#include "clonelab/errors.hpp"

#include <string>

namespace clonelab {

/// Exact fraction p / d^e for a fixed base d >= 2.
///
/// Values are kept normalized: a zero numerator forces e = 0, and
/// otherwise d does not divide the numerator.  Because of that,
/// structural equality coincides with numeric equality.
///
/// Mixed-base arithmetic is rejected rather than converted; silent base
/// coercion hides normalization bugs.
class Dadic {
public:
    Dadic(long base, BigInt numerator, unsigned exponent = 0)
        : base_(base), num_(std::move(numerator)), exp_(exponent) {
        if (base_ < 2)
            throw ParameterError("d-adic base must be at least 2, got " + std::to_string(base_));
        normalize();
    }

    static Dadic from_integer(long base, BigInt n) { return Dadic(base, std::move(n), 0); }

    /// Accepts a plain decimal integer or a "p/d^e" literal whose d
    /// matches `base` exactly.
    static Dadic parse(long base, const std::string& text);

    long base() const { return base_; }
    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_nonneg() const { return num_ >= 0; }
    bool is_integer() const { return exp_ == 0; }

    /// Canonical literal: plain decimal when e = 0, otherwise "p/d^e".
    std::string str() const;

    friend Dadic operator+(const Dadic& a, const Dadic& b);
    friend Dadic operator*(const Dadic& a, const Dadic& b);
    friend Dadic operator-(const Dadic& a);
    friend Dadic operator-(const Dadic& a, const Dadic& b) { return a + (-b); }

    friend bool operator==(const Dadic& a, const Dadic& b) {
        require_same_base(a, b);
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Dadic& a, const Dadic& b) { return !(a == b); }

    /// p/d^e <= q/d^f  iff  p * d^f <= q * d^e over the integers.
    friend bool leq(const Dadic& a, const Dadic& b);

private:
    void normalize();
    static void require_same_base(const Dadic& a, const Dadic& b);

    long base_;
    BigInt num_;
    unsigned exp_;
};

} // namespace clonelab
