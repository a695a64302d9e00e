#ifndef COMINPAIR_COUNTING_HPP
#define COMINPAIR_COUNTING_HPP

// Instrumented scalar for exact operation tallies. Every value carries a
// pointer to the tally of the call it belongs to, so concurrent measured
// calls never share state (no globals, no thread-locals). Multiplications
// and divisions land in one bucket, additions and subtractions in the other;
// negation and comparison are free.

#include <cstdint>
#include <utility>

namespace cominpair {

struct OpCounts {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
    std::uint64_t total() const { return multiplications + additions; }
};

template <typename T>
class Counted {
  public:
    Counted() : v_(0), tally_(nullptr) {}
    Counted(int x) : v_(x), tally_(nullptr) {} // literals carry no tally
    Counted(T v, OpCounts* tally) : v_(std::move(v)), tally_(tally) {}

    const T& value() const { return v_; }

    friend Counted operator*(const Counted& a, const Counted& b) {
        OpCounts* t = merge(a, b);
        if (t) ++t->multiplications;
        return Counted(a.v_ * b.v_, t);
    }
    friend Counted operator/(const Counted& a, const Counted& b) {
        OpCounts* t = merge(a, b);
        if (t) ++t->multiplications;
        return Counted(a.v_ / b.v_, t);
    }
    friend Counted operator+(const Counted& a, const Counted& b) {
        OpCounts* t = merge(a, b);
        if (t) ++t->additions;
        return Counted(a.v_ + b.v_, t);
    }
    friend Counted operator-(const Counted& a, const Counted& b) {
        OpCounts* t = merge(a, b);
        if (t) ++t->additions;
        return Counted(a.v_ - b.v_, t);
    }
    Counted operator-() const { return Counted(-v_, tally_); }

    Counted& operator*=(const Counted& b) { return *this = *this * b; }
    Counted& operator/=(const Counted& b) { return *this = *this / b; }
    Counted& operator+=(const Counted& b) { return *this = *this + b; }
    Counted& operator-=(const Counted& b) { return *this = *this - b; }

    friend bool operator==(const Counted& a, const Counted& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Counted& a, const Counted& b) { return a.v_ != b.v_; }

  private:
    static OpCounts* merge(const Counted& a, const Counted& b) {
        return a.tally_ ? a.tally_ : b.tally_;
    }

    T v_;
    OpCounts* tally_;
};

} // namespace cominpair

#endif
