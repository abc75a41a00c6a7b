#ifndef MOTIVOL_RING_HPP
#define MOTIVOL_RING_HPP

#include "motivol/rat.hpp"

#include <concepts>

namespace motivol {

// Commutative Q-algebra contract used by the series kernels. A coefficient
// type opts in by specializing ring_ops<R>: zero/one compatible with a given
// value (rings here may carry runtime structure, e.g. the group of a class
// function, so neutral elements are derived from an existing element).
template <class R>
struct ring_ops;

template <>
struct ring_ops<Rat> {
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static Rat scale(const Rat& x, const Rat& c) { return x * c; }
};

template <class R>
concept Ring = requires(const R& a, const R& b, const Rat& c) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_ops<R>::zero(a) } -> std::convertible_to<R>;
    { ring_ops<R>::one(a) } -> std::convertible_to<R>;
    { ring_ops<R>::scale(a, c) } -> std::convertible_to<R>;
};

template <Ring R>
bool ring_is_zero(const R& a)
{
    return a == ring_ops<R>::zero(a);
}

}  // namespace motivol

#endif
