#include "gapsmith/semiorder.hpp"

#include <algorithm>
#include <numeric>

namespace gapsmith {

Semiorder::Semiorder(const std::vector<std::vector<bool>>& strict) : n_(strict.size()), m_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (strict[i].size() != n_) throw Error(ErrorKind::InvalidArgument, "relation matrix is not square");
        for (std::size_t j = 0; j < n_; ++j) set(i, j, strict[i][j]);
    }
}

std::vector<std::vector<bool>> Semiorder::matrix() const {
    std::vector<std::vector<bool>> out(n_, std::vector<bool>(n_, false));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = prec(i, j);
    return out;
}

Semiorder Semiorder::restrict_to(const std::vector<std::size_t>& members) const {
    Semiorder out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) out.set(i, j, prec(members[i], members[j]));
    return out;
}

Semiorder Semiorder::permute(const std::vector<std::size_t>& perm) const {
    Semiorder out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.set(perm[i], perm[j], prec(i, j));
    return out;
}

const char* to_string(AxiomVerdict::Kind kind) {
    switch (kind) {
        case AxiomVerdict::Kind::Valid: return "Valid";
        case AxiomVerdict::Kind::Violates1: return "Violates1";
        case AxiomVerdict::Kind::Violates2: return "Violates2";
    }
    return "?";
}

AxiomVerdict check_axioms(const Semiorder& r) {
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r.prec(i, j) && r.prec(j, i))
                throw Error(ErrorKind::NotAsymmetric,
                            "pair (" + std::to_string(i) + ", " + std::to_string(j) + ") related both ways");

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!r.prec(x, y)) continue;
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t t = 0; t < n; ++t)
                    if (r.prec(z, t) && !r.prec(x, t) && !r.prec(z, y))
                        return {AxiomVerdict::Kind::Violates1, {x, y, z, t}};
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!r.prec(x, y)) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (!r.prec(y, z)) continue;
                for (std::size_t w = 0; w < n; ++w)
                    if (!r.prec(x, w) && !r.prec(w, z)) return {AxiomVerdict::Kind::Violates2, {x, y, z, w}};
            }
        }
    return {};
}

TraceOrder::TraceOrder(const Semiorder& r) : n_(r.size()), w_(n_ * n_, 0) {
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y) {
            bool ok = true;
            for (std::size_t z = 0; z < n_ && ok; ++z) {
                if (r.prec(z, x) && !r.prec(z, y)) ok = false;
                if (r.prec(y, z) && !r.prec(x, z)) ok = false;
            }
            w_[x * n_ + y] = ok ? 1 : 0;
        }
}

std::vector<std::size_t> TraceOrder::sorted() const {
    std::vector<std::size_t> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) { return strict(a, b); });
    return idx;
}

TraceOrder trace(const Semiorder& r) { return TraceOrder(r); }

PairCheck check_ss(const Semiorder& r, const SSRep& u) {
    if (u.values.size() != r.size()) throw Error(ErrorKind::InvalidArgument, "representation size mismatch");
    for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < r.size(); ++y)
            if (r.prec(x, y) != (u.values[x] + 1 < u.values[y])) return {false, std::pair{x, y}};
    return {};
}

PairCheck check_trace_monotone(const Semiorder& r, const SSRep& u) {
    const TraceOrder t(r);
    for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < r.size(); ++y)
            if (t.weak(x, y) && u.values[x] > u.values[y]) return {false, std::pair{x, y}};
    return {};
}

namespace {

struct Edge {
    std::size_t from, to;
    Rational weight;
};

// Bellman-Ford from a virtual source joined to every node with weight 0.
// Returns potentials, or nullopt on a negative cycle.
std::optional<std::vector<Rational>> feasible_potentials(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<Rational> dist(n, Rational(0));
    for (std::size_t round = 0; round <= n; ++round) {
        bool changed = false;
        for (const auto& e : edges) {
            Rational cand = dist[e.from] + e.weight;
            if (cand < dist[e.to]) {
                dist[e.to] = std::move(cand);
                changed = true;
            }
        }
        if (!changed) return dist;
    }
    return std::nullopt;
}

Rational::Int factorial(std::size_t n) {
    Rational::Int f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

SSRep synthesize_ss(const Semiorder& r) {
    const auto verdict = check_axioms(r);
    if (!verdict.valid())
        throw Error(ErrorKind::NotASemiorder, std::string("relation ") + to_string(verdict.kind));
    const std::size_t n = r.size();
    if (n == 0) return {};
    if (n == 1) return {{Rational(0)}};

    const TraceOrder t(r);
    const Rational floor_slack(Rational::Int(1), Rational::Int(2 * n) * factorial(n));
    for (Rational slack(Rational::Int(1), Rational::Int(2 * n)); slack >= floor_slack; slack /= 2) {
        // u(to) - u(from) <= weight
        std::vector<Edge> edges;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                if (r.prec(x, y)) edges.push_back({y, x, -(Rational(1) + slack)});
                else edges.push_back({x, y, Rational(1)});
                if (t.weak(x, y)) edges.push_back({y, x, Rational(0)});
            }
        auto dist = feasible_potentials(n, edges);
        if (!dist) continue;
        Rational lo = *std::min_element(dist->begin(), dist->end());
        SSRep u;
        for (auto& d : *dist) u.values.push_back(d - lo);
        if (check_ss(r, u) && check_trace_monotone(r, u)) return u;
    }
    throw Error(ErrorKind::SynthesisFailed, "slack schedule exhausted");
}

std::vector<Block> irreducible_components(const Semiorder& r) {
    const TraceOrder t(r);
    const auto order = t.sorted();
    std::vector<Block> blocks;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < order.size(); ++i) {
        current.push_back(order[i]);
        bool cut = i + 1 < order.size();
        for (std::size_t a = 0; a <= i && cut; ++a)
            for (std::size_t b = i + 1; b < order.size() && cut; ++b)
                if (!r.prec(order[a], order[b])) cut = false;
        if (cut || i + 1 == order.size()) {
            blocks.push_back({current, r.restrict_to(current)});
            current.clear();
        }
    }
    return blocks;
}

Semiorder glue_relation(const std::vector<std::pair<Semiorder, SSRep>>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.first.size();
    Semiorder out(n);
    std::size_t offset = 0;
    for (const auto& [rel, rep] : parts) {
        for (std::size_t i = 0; i < rel.size(); ++i) {
            for (std::size_t j = 0; j < rel.size(); ++j) out.set(offset + i, offset + j, rel.prec(i, j));
            for (std::size_t j = offset + rel.size(); j < n; ++j) out.set(offset + i, j, true);
        }
        offset += rel.size();
    }
    return out;
}

SSRep glue(const std::vector<std::pair<Semiorder, SSRep>>& parts) {
    SSRep out;
    for (const auto& [rel, rep] : parts) {
        if (rep.values.size() != rel.size()) throw Error(ErrorKind::InvalidArgument, "part size mismatch");
        if (rep.values.empty()) continue;
        Rational shift = 0;
        if (!out.values.empty()) {
            const Rational sup = *std::max_element(out.values.begin(), out.values.end());
            const Rational inf = *std::min_element(rep.values.begin(), rep.values.end());
            shift = sup - inf + 2;
        }
        for (const auto& v : rep.values) out.values.push_back(v + shift);
    }
    return out;
}

namespace {

using Mask = std::uint32_t;

// Interval-order nesting plus the semiorder chain condition, on bitmasks.
bool valid_prefix(const std::vector<Mask>& succ, const std::vector<Mask>& pred, std::size_t k) {
    const Mask all = (Mask(1) << k) - 1;
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t z = x + 1; z < k; ++z) {
            const Mask a = succ[x] & all, b = succ[z] & all;
            if ((a & ~b) && (b & ~a)) return false;
        }
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            if (!(succ[x] >> y & 1)) continue;
            for (std::size_t z = 0; z < k; ++z) {
                if (!(succ[y] >> z & 1)) continue;
                if (((succ[x] | pred[z]) & all) != all) return false;
            }
        }
    return true;
}

void extend(std::size_t k, std::size_t n, std::vector<Mask>& succ, std::vector<Mask>& pred,
            std::vector<Semiorder>& out) {
    if (k == n) {
        Semiorder s(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s.set(i, j, succ[i] >> j & 1);
        out.push_back(std::move(s));
        return;
    }
    std::size_t combos = 1;
    for (std::size_t i = 0; i < k; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i, c /= 3) {
            const std::size_t choice = c % 3;  // 0 none, 1 i<k, 2 k<i
            succ[i] &= ~(Mask(1) << k);
            pred[i] &= ~(Mask(1) << k);
            if (choice == 1) { succ[i] |= Mask(1) << k; }
            if (choice == 2) pred[i] |= Mask(1) << k;
        }
        succ[k] = 0;
        pred[k] = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (succ[i] >> k & 1) pred[k] |= Mask(1) << i;
            if (pred[i] >> k & 1) succ[k] |= Mask(1) << i;
        }
        if (valid_prefix(succ, pred, k + 1)) extend(k + 1, n, succ, pred, out);
    }
    for (std::size_t i = 0; i < k; ++i) {
        succ[i] &= ~(Mask(1) << k);
        pred[i] &= ~(Mask(1) << k);
    }
}

std::vector<std::uint8_t> encode(const Semiorder& r) {
    std::vector<std::uint8_t> bits;
    bits.reserve(r.size() * r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) bits.push_back(r.prec(i, j) ? 1 : 0);
    return bits;
}

}  // namespace

Semiorder canonical_form(const Semiorder& r) {
    const std::size_t n = r.size();
    // Positions are assigned by (in-degree, out-degree); only relabellings
    // inside a degree class need to be searched.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> keyed;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t in = 0, out = 0;
        for (std::size_t j = 0; j < n; ++j) {
            in += r.prec(j, i);
            out += r.prec(i, j);
        }
        keyed.push_back({{in, out}, i});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::size_t> order;  // order[pos] = element
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        order.push_back(keyed[i].second);
        if (i == 0 || keyed[i].first != keyed[i - 1].first) groups.push_back({i, i + 1});
        else groups.back().second = i + 1;
    }
    for (auto& g : groups) std::sort(order.begin() + g.first, order.begin() + g.second);

    std::optional<std::vector<std::uint8_t>> best;
    Semiorder best_rel;
    auto visit = [&](const std::vector<std::size_t>& ord) {
        std::vector<std::size_t> perm(n);
        for (std::size_t pos = 0; pos < n; ++pos) perm[ord[pos]] = pos;
        Semiorder cand = r.permute(perm);
        auto bits = encode(cand);
        if (!best || bits < *best) {
            best = std::move(bits);
            best_rel = std::move(cand);
        }
    };
    // Odometer over the product of per-group permutations.
    std::vector<std::size_t> ord = order;
    while (true) {
        visit(ord);
        std::size_t gi = groups.size();
        while (gi > 0) {
            auto& g = groups[gi - 1];
            if (std::next_permutation(ord.begin() + g.first, ord.begin() + g.second)) break;
            --gi;  // that group wrapped around to sorted order
        }
        if (gi == 0) break;
    }
    return best_rel;
}

Enumeration enumerate_semiorders(std::size_t n, bool up_to_iso, std::size_t max_n) {
    if (n > max_n) throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds " + std::to_string(max_n));
    std::vector<Semiorder> labelled;
    if (n == 0) {
        labelled.emplace_back(0);
    } else {
        std::vector<Mask> succ(n, 0), pred(n, 0);
        extend(0, n, succ, pred, labelled);
    }
    Enumeration e;
    if (!up_to_iso) {
        e.count = labelled.size();
        e.instances = std::move(labelled);
        return e;
    }
    std::vector<std::pair<std::vector<std::uint8_t>, Semiorder>> seen;
    for (const auto& s : labelled) {
        Semiorder c = canonical_form(s);
        seen.push_back({encode(c), std::move(c)});
    }
    std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    seen.erase(std::unique(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
               seen.end());
    for (auto& [bits, rel] : seen) e.instances.push_back(std::move(rel));
    e.count = e.instances.size();
    return e;
}

}  // namespace gapsmith
