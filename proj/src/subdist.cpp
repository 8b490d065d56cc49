#include "chancalc/subdist.hpp"

#include <set>

#include "chancalc/errors.hpp"

namespace chancalc {

SubDist SubDist::zero(SpaceList spaces) {
    std::size_t n = product_size(spaces);
    return SubDist(std::move(spaces), std::vector<Scalar>(n));
}

SubDist SubDist::from_weights(SpaceList spaces, std::vector<Scalar> weights) {
    std::size_t n = product_size(spaces);
    if (weights.size() != n) {
        throw ValidationError("weight vector has " + std::to_string(weights.size()) +
                              " entries, expected " + std::to_string(n) + " for (" +
                              space_names(spaces) + ")");
    }
    Scalar total;
    for (const auto& w : weights) total += w;
    if (total > Scalar::one()) {
        throw ValidationError("subdistribution mass " + total.to_fraction_string() +
                              " exceeds 1 over (" + space_names(spaces) + ")");
    }
    return SubDist(std::move(spaces), std::move(weights));
}

const Scalar& SubDist::at_key(std::string_view key) const {
    return w_.at(parse_tuple_key(spaces_, key));
}

Scalar SubDist::total() const {
    Scalar t;
    for (const auto& w : w_) t += w;
    return t;
}

bool SubDist::is_zero() const {
    for (const auto& w : w_) {
        if (!w.is_zero()) return false;
    }
    return true;
}

bool SubDist::operator==(const SubDist& o) const {
    return spaces_equal(spaces_, o.spaces_) && w_ == o.w_;
}

SubDist SubDist::scaled(const Scalar& s) const {
    if (s > Scalar::one()) {
        throw ValidationError("scaling factor " + s.to_fraction_string() + " exceeds 1");
    }
    std::vector<Scalar> out;
    out.reserve(w_.size());
    for (const auto& w : w_) out.push_back(w * s);
    return SubDist(spaces_, std::move(out));
}

SubDist SubDist::marginal(const std::vector<std::size_t>& keep_wires) const {
    std::set<std::size_t> seen;
    SpaceList kept;
    for (std::size_t w : keep_wires) {
        if (w >= spaces_.size()) {
            throw ValidationError("marginal wire index " + std::to_string(w) + " out of range");
        }
        if (!seen.insert(w).second) {
            throw ValidationError("marginal wire index " + std::to_string(w) + " repeated");
        }
        kept.push_back(spaces_[w]);
    }
    std::vector<Scalar> out(product_size(kept));
    for (std::size_t flat = 0; flat < w_.size(); ++flat) {
        if (w_[flat].is_zero()) continue;
        auto tuple = unflatten_index(spaces_, flat);
        std::vector<std::size_t> kt;
        kt.reserve(keep_wires.size());
        for (std::size_t w : keep_wires) kt.push_back(tuple[w]);
        out[flatten_index(kept, kt)] += w_[flat];
    }
    return SubDist(std::move(kept), std::move(out));
}

SubDist make_subdist(const FiniteSpace& space,
                     const std::vector<std::pair<std::string, Scalar>>& weights) {
    std::vector<Scalar> w(space.size());
    std::set<std::string> seen;
    for (const auto& [label, value] : weights) {
        if (!seen.insert(label).second) {
            throw ValidationError("duplicate label \"" + label + "\" in subdistribution over \"" +
                                  space.name() + "\"");
        }
        w[space.index_of(label)] = value;
    }
    return SubDist::from_weights({space}, std::move(w));
}

Scalar weight(const SubDist& dist) { return dist.total(); }

SubDist normalize_state(const SubDist& dist) {
    Scalar t = dist.total();
    if (t.is_zero() || t.is_one()) return dist;
    std::vector<Scalar> out;
    out.reserve(dist.size());
    for (const auto& w : dist.weights()) out.push_back(w / t);
    return SubDist::from_weights(dist.spaces(), std::move(out));
}

SubDist tensor_states(const SubDist& a, const SubDist& b) {
    SpaceList spaces = concat(a.spaces(), b.spaces());
    std::vector<Scalar> out;
    out.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out.push_back(a.at(i) * b.at(j));
        }
    }
    return SubDist::from_weights(std::move(spaces), std::move(out));
}

SubDist flip_state(const FiniteSpace& space, const Scalar& r) {
    if (space.size() != 2) {
        throw ValidationError("flip needs a two-element space, got \"" + space.name() +
                              "\" of size " + std::to_string(space.size()));
    }
    if (r > Scalar::one()) {
        throw ValidationError("flip bias " + r.to_fraction_string() + " exceeds 1");
    }
    // Declaration order is {0-outcome, 1-outcome}.
    return SubDist::from_weights({space}, {Scalar::one() - r, r});
}

SubDist uniform_state(const FiniteSpace& space) {
    Scalar w = Scalar::one() / Scalar(static_cast<long>(space.size()));
    return SubDist::from_weights({space}, std::vector<Scalar>(space.size(), w));
}

SubDist point_state(const FiniteSpace& space, std::string_view label) {
    std::vector<Scalar> w(space.size());
    w[space.index_of(label)] = Scalar::one();
    return SubDist::from_weights({space}, std::move(w));
}

} // namespace chancalc
