#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gapsmith/rational.hpp"

namespace gapsmith {

/// Strict relation on {0, .., n-1}, stored as a dense boolean matrix.
/// Construction only checks the shape; use check_axioms for validity.
class Semiorder {
public:
    Semiorder() = default;
    explicit Semiorder(std::size_t n) : n_(n), m_(n * n, 0) {}
    explicit Semiorder(const std::vector<std::vector<bool>>& strict);

    std::size_t size() const { return n_; }
    bool prec(std::size_t i, std::size_t j) const { return m_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v = true) { m_[i * n_ + j] = v ? 1 : 0; }

    std::vector<std::vector<bool>> matrix() const;

    /// Relation restricted to `members`, renumbered in the given order.
    Semiorder restrict_to(const std::vector<std::size_t>& members) const;
    /// Relation with element i renamed to perm[i].
    Semiorder permute(const std::vector<std::size_t>& perm) const;

    friend bool operator==(const Semiorder&, const Semiorder&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> m_;
};

struct AxiomVerdict {
    enum class Kind { Valid, Violates1, Violates2 };
    Kind kind = Kind::Valid;
    /// (x, y, z, t) for condition (1), (x, y, z, w) for condition (2).
    std::array<std::size_t, 4> witness{};

    bool valid() const { return kind == Kind::Valid; }
};

const char* to_string(AxiomVerdict::Kind kind);

/// Throws NotAsymmetric when some pair is related both ways (or i < i).
AxiomVerdict check_axioms(const Semiorder& r);

/// Total preorder x <=0 y: every strict predecessor of x precedes y, and
/// x precedes every strict successor of y.
class TraceOrder {
public:
    explicit TraceOrder(const Semiorder& r);

    std::size_t size() const { return n_; }
    bool weak(std::size_t x, std::size_t y) const { return w_[x * n_ + y] != 0; }
    bool strict(std::size_t x, std::size_t y) const { return weak(x, y) && !weak(y, x); }
    bool indifferent(std::size_t x, std::size_t y) const { return weak(x, y) && weak(y, x); }

    /// Elements sorted ascending; indifferent elements keep index order.
    std::vector<std::size_t> sorted() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> w_;
};

TraceOrder trace(const Semiorder& r);

/// Utility values under the fixed threshold 1.
struct SSRep {
    std::vector<Rational> values;

    friend bool operator==(const SSRep&, const SSRep&) = default;
};

struct PairCheck {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;

    explicit operator bool() const { return ok; }
};

/// x < y exactly when u(x) + 1 < u(y), for every ordered pair.
PairCheck check_ss(const Semiorder& r, const SSRep& u);

/// u(x) <= u(y) whenever x <=0 y.
PairCheck check_trace_monotone(const Semiorder& r, const SSRep& u);

/// Solves the difference-constraint system for a trace-monotone
/// representation. Throws NotASemiorder or SynthesisFailed.
SSRep synthesize_ss(const Semiorder& r);

struct Block {
    std::vector<std::size_t> members;  // original indices, trace order
    Semiorder relation;                // restricted relation
};

/// Maximal decomposition into blocks X_1 < X_2 < ... with every element of
/// an earlier block strictly below every element of a later one.
std::vector<Block> irreducible_components(const Semiorder& r);

/// Concatenation of parts with every earlier element below every later one.
Semiorder glue_relation(const std::vector<std::pair<Semiorder, SSRep>>& parts);

/// Left fold of u(x) = u_2(x) + sup u_1 - inf u_2 + 2 over the parts.
SSRep glue(const std::vector<std::pair<Semiorder, SSRep>>& parts);

struct Enumeration {
    std::size_t count = 0;
    std::vector<Semiorder> instances;
};

/// All semiorders on n labelled elements, or one representative per
/// isomorphism class. Throws TooLarge above max_n.
Enumeration enumerate_semiorders(std::size_t n, bool up_to_iso, std::size_t max_n = 6);

/// Canonical relabelling used for isomorphism rejection.
Semiorder canonical_form(const Semiorder& r);

}  // namespace gapsmith
