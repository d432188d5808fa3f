#pragma once

#include <concepts>
#include <stdexcept>

namespace pencils {

/// Raised when an internal consistency check fails, i.e. the computation
/// reached a state the underlying classification theory rules out. Callers
/// map this to a distinct process exit code.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Commutative ring element with exact equality. `from_int` manufactures a
/// constant in the same ring as the receiver, which is how code generic over
/// F_p (whose elements carry their modulus) conjures literals.
template <class R>
concept ring_element = std::copy_constructible<R> && requires(const R a, const R b, long long n) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.from_int(n) } -> std::convertible_to<R>;
};

template <class K>
concept field_element = ring_element<K> && requires(const K a, const K b) {
    { a / b } -> std::convertible_to<K>;
    { a.inv() } -> std::convertible_to<K>;
};

}  // namespace pencils
