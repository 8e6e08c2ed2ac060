#include "clonelab/dadic.hpp"

#include <algorithm>
#include <cctype>

namespace clonelab {

void Dadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && divisible_by(num_, base_)) {
        num_ = divide_exact(num_, base_);
        --exp_;
    }
}

void Dadic::require_same_base(const Dadic& a, const Dadic& b) {
    if (a.base_ != b.base_)
        throw StructuralError("mixed d-adic bases: " + std::to_string(a.base_) + " vs " +
                              std::to_string(b.base_));
}

Dadic operator+(const Dadic& a, const Dadic& b) {
    Dadic::require_same_base(a, b);
    const unsigned e = std::max(a.exp_, b.exp_);
    BigInt p = a.num_ * bigint_pow(a.base_, e - a.exp_);
    BigInt q = b.num_ * bigint_pow(b.base_, e - b.exp_);
    return Dadic(a.base_, p + q, e);
}

Dadic operator*(const Dadic& a, const Dadic& b) {
    Dadic::require_same_base(a, b);
    return Dadic(a.base_, a.num_ * b.num_, a.exp_ + b.exp_);
}

Dadic operator-(const Dadic& a) { return Dadic(a.base_, -a.num_, a.exp_); }

bool leq(const Dadic& a, const Dadic& b) {
    Dadic::require_same_base(a, b);
    return a.num_ * bigint_pow(a.base_, b.exp_) <= b.num_ * bigint_pow(b.base_, a.exp_);
}

std::string Dadic::str() const {
    if (exp_ == 0)
        return to_string(num_);
    return to_string(num_) + "/" + std::to_string(base_) + "^" + std::to_string(exp_);
}

Dadic Dadic::parse(long base, const std::string& text) {
    const auto bad = [&]() -> StructuralError {
        return StructuralError("malformed d-adic literal: \"" + text + "\"");
    };
    const auto is_integer_token = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };

    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw bad();
        return Dadic(base, BigInt(text), 0);
    }

    const std::string num_part = text.substr(0, slash);
    const std::string den_part = text.substr(slash + 1);
    const auto caret = den_part.find('^');
    if (caret == std::string::npos)
        throw bad();
    const std::string base_part = den_part.substr(0, caret);
    const std::string exp_part = den_part.substr(caret + 1);
    if (!is_integer_token(num_part) || !is_integer_token(base_part) || !is_integer_token(exp_part))
        throw bad();
    long lit_base = 0, exp = 0;
    try {
        lit_base = std::stol(base_part);
        exp = std::stol(exp_part);
    } catch (const std::out_of_range&) {
        throw bad();
    }
    if (lit_base != base)
        throw StructuralError("d-adic literal base " + std::to_string(lit_base) +
                              " does not match rig base " + std::to_string(base));
    if (exp < 0)
        throw bad();
    return Dadic(base, BigInt(num_part), static_cast<unsigned>(exp));
}

} // namespace clonelab
