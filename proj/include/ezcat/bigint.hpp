// Minimal arbitrary-precision signed integer.
//
// Only what exact Smith-normal-form reduction needs: ring operations,
// truncated division with remainder, comparisons and printing. Magnitudes are
// little-endian base-2^32 limb vectors; schoolbook algorithms throughout,
// which is plenty for the matrix sizes this toolkit produces.

#ifndef EZCAT_BIGINT_HPP
#define EZCAT_BIGINT_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace ezcat {

class BigInt {
  public:
    BigInt() = default;
    BigInt(long long x) {  // NOLINT: implicit by design, mirrors integer literals
        bool neg = x < 0;
        unsigned long long m = neg ? 0ULL - static_cast<unsigned long long>(x)
                                   : static_cast<unsigned long long>(x);
        while (m) {
            mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
        sign_ = mag_.empty() ? 0 : (neg ? -1 : 1);
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Truncated division: quotient rounds toward zero, |remainder| < |divisor|,
    /// sign of remainder follows the dividend (C semantics).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        trim(q.mag_);
        trim(r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    bool fits_ll() const { return mag_.size() <= 2 && !(mag_.size() == 2 && (mag_[1] >> 31)); }
    long long to_ll() const {
        if (!fits_ll()) throw std::overflow_error("BigInt: value exceeds long long");
        unsigned long long m = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // divide magnitude by 10^9, collect remainder
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            trim(m);
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return (sign_ < 0 ? "-" : "") + digits;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = b;
            b = r;
        }
        return a;
    }

  private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<std::uint32_t>(cur);
        }
        trim(r);
        return r;
    }

    // binary long division on magnitudes
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.assign(a.size(), 0);
        r.clear();
        if (cmp_mag(a, b) < 0) {
            r = a;
            return;
        }
        int bits = static_cast<int>(a.size()) * 32;
        for (int i = bits - 1; i >= 0; --i) {
            shl1(r);
            if ((a[i / 32] >> (i % 32)) & 1u) {
                if (r.empty())
                    r.push_back(1);
                else
                    r[0] |= 1u;
            }
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[i / 32] |= (1u << (i % 32));
            }
        }
        trim(q);
    }

    static void shl1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (auto& limb : m) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }
};

}  // namespace ezcat

#endif  // EZCAT_BIGINT_HPP
