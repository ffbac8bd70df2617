#pragma once

#include <cassert>
#include <cstdint>
#include <string>

namespace branches {

// Nonnegative integer extended with +infinity.  Used wherever the convention
// v_{h+1} = +infinity enters a bound or a stratum limit, so that no caller
// has to fake infinity with a sentinel value.
class ext_int {
public:
    constexpr ext_int() : v_(0), inf_(false) {}
    constexpr ext_int(std::int64_t v) : v_(v), inf_(false) { assert(v >= 0); }

    static constexpr ext_int infinity() {
        ext_int e;
        e.inf_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return inf_; }
    constexpr std::int64_t value() const {
        assert(!inf_);
        return v_;
    }

    friend constexpr bool operator==(const ext_int& a, const ext_int& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend constexpr bool operator!=(const ext_int& a, const ext_int& b) { return !(a == b); }
    friend constexpr bool operator<(const ext_int& a, const ext_int& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(const ext_int& a, const ext_int& b) { return !(b < a); }
    friend constexpr bool operator>(const ext_int& a, const ext_int& b) { return b < a; }
    friend constexpr bool operator>=(const ext_int& a, const ext_int& b) { return !(a < b); }

    friend constexpr ext_int operator+(const ext_int& a, const ext_int& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ext_int(a.v_ + b.v_);
    }
    friend constexpr ext_int operator*(const ext_int& a, const ext_int& b) {
        // 0 * infinity has no meaning in any formula here; trap it.
        if (a.inf_ || b.inf_) {
            assert(!(a == ext_int(0)) && !(b == ext_int(0)));
            return infinity();
        }
        return ext_int(a.v_ * b.v_);
    }

    friend ext_int min(const ext_int& a, const ext_int& b) { return a < b ? a : b; }
    friend ext_int max(const ext_int& a, const ext_int& b) { return a < b ? b : a; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    std::int64_t v_;
    bool inf_;
};

} // namespace branches
