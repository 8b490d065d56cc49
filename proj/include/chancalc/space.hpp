#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chancalc {

/// Named finite set with a fixed element ordering.
///
/// The declaration order of the elements is the ordering; it is never
/// sorted, and all matrix indexing in the library derives from it.
/// Cheap to copy (shared immutable payload).
class FiniteSpace {
public:
    FiniteSpace(std::string name, std::vector<std::string> elements);

    const std::string& name() const { return d_->name; }
    const std::vector<std::string>& elements() const { return d_->elements; }
    std::size_t size() const { return d_->elements.size(); }
    const std::string& label(std::size_t i) const { return d_->elements.at(i); }

    /// Index of a label; throws ValidationError for unknown labels.
    std::size_t index_of(std::string_view label) const;
    bool contains(std::string_view label) const;

    /// Structural equality: same name and same element list.
    bool operator==(const FiniteSpace& o) const;
    bool operator!=(const FiniteSpace& o) const { return !(*this == o); }

private:
    struct Data {
        std::string name;
        std::vector<std::string> elements;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> d_;
};

inline FiniteSpace make_space(std::string name, std::vector<std::string> elements) {
    return FiniteSpace(std::move(name), std::move(elements));
}

/// An ordered list of wires; the empty list is the tensor unit.
using SpaceList = std::vector<FiniteSpace>;

bool spaces_equal(const SpaceList& a, const SpaceList& b);
std::string space_names(const SpaceList& spaces);

/// Number of tuples of the product space (1 for the empty list).
/// Throws BoundError if the count overflows the internal limit.
std::size_t product_size(const SpaceList& spaces);

/// Flattening convention: row-major over the factor list, leftmost factor
/// varies slowest. One global convention, used everywhere.
std::size_t flatten_index(const SpaceList& spaces, std::span<const std::size_t> tuple);
std::vector<std::size_t> unflatten_index(const SpaceList& spaces, std::size_t flat);

/// Tuple key for serialization: labels joined by "," in wire order.
/// The empty tuple has key "".
std::string tuple_key(const SpaceList& spaces, std::size_t flat);
std::size_t parse_tuple_key(const SpaceList& spaces, std::string_view key);

SpaceList concat(const SpaceList& a, const SpaceList& b);

} // namespace chancalc
