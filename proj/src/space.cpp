#include "chancalc/space.hpp"

#include "chancalc/errors.hpp"

namespace chancalc {

namespace {
// Dense joints and channel matrices are desk scale; anything bigger than
// this is a modelling mistake, not a workload.
constexpr std::size_t kMaxProductSize = static_cast<std::size_t>(1) << 40;
} // namespace

FiniteSpace::FiniteSpace(std::string name, std::vector<std::string> elements) {
    if (elements.empty()) {
        throw ValidationError("space \"" + name + "\" must have at least one element");
    }
    auto data = std::make_shared<Data>();
    data->name = std::move(name);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const std::string& label = elements[i];
        if (label.empty()) {
            throw ValidationError("space \"" + data->name + "\" has an empty element label");
        }
        if (label.find(',') != std::string::npos) {
            throw ValidationError("space \"" + data->name + "\" element \"" + label +
                                  "\" must not contain ','");
        }
        if (!data->index.emplace(label, i).second) {
            throw ValidationError("space \"" + data->name + "\" has duplicate element \"" +
                                  label + "\"");
        }
    }
    data->elements = std::move(elements);
    d_ = std::move(data);
}

std::size_t FiniteSpace::index_of(std::string_view label) const {
    auto it = d_->index.find(std::string(label));
    if (it == d_->index.end()) {
        throw ValidationError("unknown element \"" + std::string(label) + "\" in space \"" +
                              d_->name + "\"");
    }
    return it->second;
}

bool FiniteSpace::contains(std::string_view label) const {
    return d_->index.count(std::string(label)) != 0;
}

bool FiniteSpace::operator==(const FiniteSpace& o) const {
    if (d_ == o.d_) return true;
    return d_->name == o.d_->name && d_->elements == o.d_->elements;
}

bool spaces_equal(const SpaceList& a, const SpaceList& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

std::string space_names(const SpaceList& spaces) {
    std::string out;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        if (i) out += ",";
        out += spaces[i].name();
    }
    return out;
}

std::size_t product_size(const SpaceList& spaces) {
    std::size_t n = 1;
    for (const auto& s : spaces) {
        if (n > kMaxProductSize / s.size()) {
            throw BoundError("product space over (" + space_names(spaces) + ") is too large");
        }
        n *= s.size();
    }
    return n;
}

std::size_t flatten_index(const SpaceList& spaces, std::span<const std::size_t> tuple) {
    if (tuple.size() != spaces.size()) {
        throw ValidationError("tuple arity mismatch against (" + space_names(spaces) + ")");
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        if (tuple[i] >= spaces[i].size()) {
            throw ValidationError("tuple index out of range in space \"" + spaces[i].name() +
                                  "\"");
        }
        flat = flat * spaces[i].size() + tuple[i];
    }
    return flat;
}

std::vector<std::size_t> unflatten_index(const SpaceList& spaces, std::size_t flat) {
    std::vector<std::size_t> tuple(spaces.size(), 0);
    for (std::size_t i = spaces.size(); i-- > 0;) {
        tuple[i] = flat % spaces[i].size();
        flat /= spaces[i].size();
    }
    return tuple;
}

std::string tuple_key(const SpaceList& spaces, std::size_t flat) {
    auto tuple = unflatten_index(spaces, flat);
    std::string key;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        if (i) key += ",";
        key += spaces[i].label(tuple[i]);
    }
    return key;
}

std::size_t parse_tuple_key(const SpaceList& spaces, std::string_view key) {
    std::string k(key);
    if (spaces.empty()) {
        if (!k.empty()) {
            throw ValidationError("expected empty tuple key, got \"" + k + "\"");
        }
        return 0;
    }
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = k.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(k.substr(start));
            break;
        }
        parts.push_back(k.substr(start, comma - start));
        start = comma + 1;
    }
    if (parts.size() != spaces.size()) {
        throw ValidationError("tuple key \"" + k + "\" has " + std::to_string(parts.size()) +
                              " components, expected " + std::to_string(spaces.size()) +
                              " for (" + space_names(spaces) + ")");
    }
    std::vector<std::size_t> tuple;
    tuple.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        tuple.push_back(spaces[i].index_of(parts[i]));
    }
    return flatten_index(spaces, tuple);
}

SpaceList concat(const SpaceList& a, const SpaceList& b) {
    SpaceList out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace chancalc
