#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbtree {

// Unbounded natural number, base 2^32 limbs, least significant first.
// Sequence codes grow doubly exponentially in sequence length, so they
// do not fit in machine words; only the operations the coding needs are
// provided (add, mul, sub, isqrt, decimal printing).
class big_nat {
public:
    big_nat() = default;
    big_nat(uint64_t v) {
        if (v) {
            limbs_.push_back(static_cast<uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    std::strong_ordering operator<=>(const big_nat& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() <=> o.limbs_.size();
        for (size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
        return std::strong_ordering::equal;
    }
    bool operator==(const big_nat& o) const = default;

    big_nat& operator+=(const big_nat& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
        return *this;
    }
    friend big_nat operator+(big_nat a, const big_nat& b) { return a += b; }

    // requires *this >= o
    big_nat& operator-=(const big_nat& o) {
        int64_t borrow = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                        (i < o.limbs_.size() ? static_cast<int64_t>(o.limbs_[i]) : 0);
            borrow = d < 0;
            limbs_[i] = static_cast<uint32_t>(d + (borrow << 32));
        }
        if (borrow) throw std::underflow_error("big_nat subtraction underflow");
        trim();
        return *this;
    }
    friend big_nat operator-(big_nat a, const big_nat& b) { return a -= b; }

    friend big_nat operator*(const big_nat& a, const big_nat& b) {
        if (a.is_zero() || b.is_zero()) return {};
        big_nat r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] +
                               static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    big_nat half() const {
        big_nat r = *this;
        uint32_t carry = 0;
        for (size_t i = r.limbs_.size(); i-- > 0;) {
            uint32_t next = r.limbs_[i] & 1;
            r.limbs_[i] = (r.limbs_[i] >> 1) | (carry << 31);
            carry = next;
        }
        r.trim();
        return r;
    }

    // floor of the square root, by descending-bit refinement
    big_nat isqrt() const {
        if (is_zero()) return {};
        size_t bits = limbs_.size() * 32;
        big_nat r;
        for (size_t b = bits / 2 + 1; b-- > 0;) {
            big_nat cand = r;
            cand.set_bit(b);
            if (cand * cand <= *this) r = cand;
        }
        return r;
    }

    uint64_t divmod_u32(uint32_t div) {
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<uint32_t>(cur / div);
            rem = cur % div;
        }
        trim();
        return rem;
    }

    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("big_nat does not fit in 64 bits");
        uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        big_nat t = *this;
        std::string out;
        while (!t.is_zero()) {
            uint64_t chunk = t.divmod_u32(1000000000u);
            std::string part = std::to_string(chunk);
            if (!t.is_zero()) part.insert(0, 9 - part.size(), '0');
            out.insert(0, part);
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    void set_bit(size_t b) {
        size_t limb = b / 32;
        if (limbs_.size() <= limb) limbs_.resize(limb + 1, 0);
        limbs_[limb] |= uint32_t{1} << (b % 32);
    }

    std::vector<uint32_t> limbs_;
};

} // namespace cbtree
