#pragma once

#include <concepts>
#include <string>

namespace saacbr {

// Outcome of comparing two characterisations under the exceptionality
// partial order.
enum class OrderRelation {
    MoreExceptional, // left strictly greater than right
    LessExceptional, // left strictly smaller than right
    Equal,
    Incomparable,
};

const char* to_string(OrderRelation r);

// A characterisation type supplies the exceptionality partial order, the
// irrelevance relation against a new case, and a canonical rendering.
// compare must be a partial order: compare(a, a) == Equal, swapping the
// arguments flips MoreExceptional/LessExceptional, and the derived >= is
// transitive. is_irrelevant(x_new, x_past) decides whether a past case does
// not apply to the new one. All three are found by ADL.
template <typename C>
concept Characterisation =
    std::equality_comparable<C> && std::copyable<C> &&
    requires(const C& a, const C& b) {
        { compare(a, b) } -> std::same_as<OrderRelation>;
        { is_irrelevant(a, b) } -> std::same_as<bool>;
        { to_display(a) } -> std::convertible_to<std::string>;
    };

template <typename C>
bool more_exceptional(const C& a, const C& b) {
    return compare(a, b) == OrderRelation::MoreExceptional;
}

// Non-strict order: a is more exceptional than or equal to b.
template <typename C>
bool at_least_as_exceptional(const C& a, const C& b) {
    OrderRelation r = compare(a, b);
    return r == OrderRelation::MoreExceptional || r == OrderRelation::Equal;
}

} // namespace saacbr
