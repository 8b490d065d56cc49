#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chancalc/scalar.hpp"
#include "chancalc/space.hpp"
#include "chancalc/subdist.hpp"

namespace chancalc {

/// Classification flags for a channel; see `classify`.
struct ChannelClass {
    bool total = false;         // every row sums to exactly 1
    bool deterministic = false; // total and every row is a point mass
    bool full_support = false;  // every matrix entry strictly positive
};

/// A weight matrix from a product of input wires to a product of output
/// wires. Every row is a subdistribution over the flattened output space
/// (entries >= 0, row sum <= 1).
///
/// A state is a channel with no input wires (one row); a predicate is a
/// channel with no output wires (one column). The wire lists are kept
/// explicit so copy/swap/project wiring stays well-typed; flattening
/// happens only at the matrix layer, row-major with the leftmost wire
/// varying slowest.
///
/// Channels are immutable; all operations below are pure functions, so
/// values can be shared freely across threads.
class Channel {
public:
    /// Validating constructor from a dense matrix (rows x cols, row-major).
    static Channel from_matrix(SpaceList inputs, SpaceList outputs, std::vector<Scalar> matrix);

    /// Sparse rows keyed by tuple keys ("a,b" in wire order, "" for the
    /// empty tuple): input key -> list of (output key, weight). Unspecified
    /// entries are zero; duplicate keys are rejected.
    static Channel from_rows(
        SpaceList inputs, SpaceList outputs,
        const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Scalar>>>>&
            rows);

    /// A state as a 0-input channel.
    static Channel from_state(const SubDist& state);

    /// Single-output channel defined by a total function on input tuples.
    static Channel deterministic(SpaceList inputs, const FiniteSpace& output,
                                 const std::function<std::size_t(std::span<const std::size_t>)>& fn);

    const SpaceList& inputs() const { return in_; }
    const SpaceList& outputs() const { return out_; }
    std::size_t row_count() const { return rows_; }
    std::size_t col_count() const { return cols_; }

    const Scalar& entry(std::size_t row, std::size_t col) const { return m_.at(row * cols_ + col); }
    const Scalar& entry_by_key(std::string_view in_key, std::string_view out_key) const;

    /// One row as a subdistribution over the output wires.
    SubDist row_dist(std::size_t row) const;
    Scalar row_sum(std::size_t row) const;

    /// Reads a 0-input channel back as a state.
    SubDist to_state() const;

private:
    Channel(SpaceList in, SpaceList out, std::vector<Scalar> m);

    SpaceList in_, out_;
    std::size_t rows_, cols_;
    std::vector<Scalar> m_;

    friend Channel compose(const Channel&, const Channel&);
    friend Channel tensor(const Channel&, const Channel&);
    friend Channel nrm(const Channel&);
};

// --- structural generators -------------------------------------------------

Channel identity_channel(const SpaceList& spaces);
/// (x, y) |-> 1|y, x> for wire blocks a and b.
Channel swap_channel(const SpaceList& a, const SpaceList& b);
/// Copy of the whole block: x |-> 1|x, x>.
Channel copy_channel(const SpaceList& spaces);
/// Ground: x |-> 1|> (empty output, weight 1).
Channel discard_channel(const SpaceList& spaces);
/// Keeps wire k of the block, discarding the rest.
Channel project_channel(const SpaceList& spaces, std::size_t k);
/// Comparator: (x, x') |-> 1|x> if x = x', else the zero row.
Channel comparator_channel(const SpaceList& spaces);
/// Discarded comparator: (x, x') |-> weight 1 if x = x', else 0.
Channel cap_channel(const SpaceList& spaces);
/// The all-ones predicate.
Channel truth_channel(const SpaceList& spaces);
/// Deterministic rewiring: output wire j carries input wire perm[j].
Channel permute_channel(const SpaceList& spaces, const std::vector<std::size_t>& perm);

// --- channel algebra ---------------------------------------------------------

/// Sequential composition, applying f first: result（x)(z) = sum_y f(x)(y) g(y)(z).
/// f's output wires must equal g's input wires (names and order).
Channel compose(const Channel& f, const Channel& g);

/// Parallel composition: wire lists concatenate, weights multiply.
Channel tensor(const Channel& f, const Channel& g);

/// Row-mass predicate dom(f): x |-> sum_y f(x)(y).
Channel dom(const Channel& f);

/// Row-wise normalisation; zero rows stay zero. Satisfies
/// f = ((dom f) (x) nrm f) o copy as an exact matrix identity.
Channel nrm(const Channel& f);

/// State transport through a channel (Kleisli extension).
SubDist pushforward(const SubDist& state, const Channel& f);

ChannelClass classify(const Channel& f);

/// Exact entrywise equality; the wire signatures must match.
bool channels_equal(const Channel& f, const Channel& g);

/// Canonical JSON form: {"inputs": [...], "outputs": [...], "rows":
/// {in-key: {out-key: "p/q"}}} with zero entries omitted and keys emitted
/// in space order (bit-stable output).
nlohmann::ordered_json channel_to_json(const Channel& f);

} // namespace chancalc
