#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chancalc/scalar.hpp"
#include "chancalc/space.hpp"

namespace chancalc {

/// Finite subdistribution: one non-negative weight per tuple of a product
/// space, total weight <= 1. A proper distribution has total exactly 1.
///
/// Immutable after construction; every operation is a pure function.
class SubDist {
public:
    /// All-zero subdistribution over the given wires.
    static SubDist zero(SpaceList spaces);

    /// Validating constructor from a dense weight vector (flattened
    /// row-major, leftmost wire slowest).
    static SubDist from_weights(SpaceList spaces, std::vector<Scalar> weights);

    const SpaceList& spaces() const { return spaces_; }
    std::size_t size() const { return w_.size(); }
    const Scalar& at(std::size_t flat) const { return w_.at(flat); }
    const Scalar& at_key(std::string_view key) const;
    const std::vector<Scalar>& weights() const { return w_; }

    Scalar total() const;
    bool is_zero() const;
    bool is_proper() const { return total().is_one(); }

    bool operator==(const SubDist& o) const;
    bool operator!=(const SubDist& o) const { return !(*this == o); }

    /// Pointwise scaling by s in [0, 1]. Internal building block (the
    /// scale-invariance law of normalisation); not part of any file format.
    SubDist scaled(const Scalar& s) const;

    /// Sum out every wire not in `keep`; the result's wire order is the
    /// order given in `keep` (wire indices, which may repeat is rejected).
    SubDist marginal(const std::vector<std::size_t>& keep_wires) const;

private:
    SubDist(SpaceList spaces, std::vector<Scalar> weights)
        : spaces_(std::move(spaces)), w_(std::move(weights)) {}

    SpaceList spaces_;
    std::vector<Scalar> w_;
};

/// Builds a subdistribution over a single space from (label, weight) pairs.
/// Unspecified labels default to weight 0; duplicate labels are rejected;
/// the total must not exceed 1.
SubDist make_subdist(const FiniteSpace& space,
                     const std::vector<std::pair<std::string, Scalar>>& weights);

/// Total mass of a subdistribution.
Scalar weight(const SubDist& dist);

/// Rescales a nonzero subdistribution to a proper distribution; the zero
/// subdistribution is fixed. Total by definition, idempotent, and invariant
/// under scaling of its argument.
SubDist normalize_state(const SubDist& dist);

/// Product state: pointwise products over the concatenated wire list.
SubDist tensor_states(const SubDist& a, const SubDist& b);

/// flip(r) = r|1> + (1-r)|0> on a two-element space whose order is
/// {0-element, 1-element}; requires r in [0, 1].
SubDist flip_state(const FiniteSpace& space, const Scalar& r);

/// 1/|X| everywhere.
SubDist uniform_state(const FiniteSpace& space);

/// Point mass 1|x>.
SubDist point_state(const FiniteSpace& space, std::string_view label);

} // namespace chancalc
