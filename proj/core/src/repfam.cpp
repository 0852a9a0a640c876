#include "congest/repfam.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace congest {

SetFamily SetFamily::with_witnesses() {
    SetFamily f;
    f.witnesses_.emplace();
    return f;
}

void SetFamily::absorb_elements(const Member& m) {
    for (NodeId x : m) {
        auto it = std::lower_bound(universe_.begin(), universe_.end(), x);
        if (it == universe_.end() || *it != x) universe_.insert(it, x);
    }
}

bool SetFamily::add(Member m) {
    if (witnesses_) throw Error("witness-carrying family requires add(member, witness)");
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    auto it = std::lower_bound(members_.begin(), members_.end(), m);
    if (it != members_.end() && *it == m) return false;
    absorb_elements(m);
    members_.insert(it, std::move(m));
    return true;
}

bool SetFamily::add(Member m, Witness w) {
    if (!witnesses_) {
        if (!members_.empty()) throw Error("cannot attach witnesses to a plain family");
        witnesses_.emplace();
    }
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    auto it = std::lower_bound(members_.begin(), members_.end(), m);
    if (it != members_.end() && *it == m) return false;  // first witness wins
    absorb_elements(m);
    std::size_t pos = static_cast<std::size_t>(it - members_.begin());
    members_.insert(it, std::move(m));
    witnesses_->insert(witnesses_->begin() + pos, std::move(w));
    return true;
}

bool SetFamily::contains(const Member& m) const {
    Member s = m;
    std::sort(s.begin(), s.end());
    return std::binary_search(members_.begin(), members_.end(), s);
}

const Witness& SetFamily::witness(std::size_t i) const {
    if (!witnesses_) throw Error("family carries no witnesses");
    return (*witnesses_)[i];
}

void SetFamily::declare_universe(std::vector<NodeId> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (NodeId x : universe_) {
        if (!std::binary_search(elements.begin(), elements.end(), x)) {
            throw Error("declared universe misses an element already in use");
        }
    }
    universe_ = std::move(elements);
}

std::size_t SetFamily::max_member_size() const {
    std::size_t p = 0;
    for (const Member& m : members_) p = std::max(p, m.size());
    return p;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        if (r > UINT64_MAX / num) return UINT64_MAX;
        r = r * num / i;
    }
    return r;
}

namespace {

bool any_disjoint(const std::vector<std::uint32_t>& masks, std::uint32_t blocker) {
    for (std::uint32_t m : masks) {
        if ((m & blocker) == 0) return true;
    }
    return false;
}

// Enumerates blockers of size exactly `left` extending `blocker` with universe
// positions >= from, returning false on the first violation.
bool check_blockers(const std::vector<std::uint32_t>& full, const std::vector<std::uint32_t>& sub,
                    std::size_t universe_size, std::uint32_t blocker, std::size_t from, int left) {
    if (left == 0) {
        if (any_disjoint(full, blocker) && !any_disjoint(sub, blocker)) return false;
        return true;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= universe_size; ++i) {
        if (!check_blockers(full, sub, universe_size, blocker | (1u << i), i + 1, left - 1)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_q_representative(const SetFamily& sub, const SetFamily& full, int q,
                         const RepfamLimits& limits) {
    if (q < 0) throw std::invalid_argument("q must be non-negative");
    for (const Member& m : sub.members()) {
        if (!full.contains(m)) throw std::invalid_argument("sub is not a subfamily of full");
    }
    // Blockers range over the union of full's elements: elements outside it
    // cannot affect disjointness with any member.
    std::vector<NodeId> universe;
    for (const Member& m : full.members()) {
        for (NodeId x : m) universe.push_back(x);
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (universe.size() > limits.max_union || q > limits.max_q || universe.size() > 32) {
        throw Error("is_q_representative guard exceeded (union " +
                    std::to_string(universe.size()) + ", q " + std::to_string(q) + ")");
    }

    auto to_mask = [&](const Member& m) {
        std::uint32_t mask = 0;
        for (NodeId x : m) {
            mask |= 1u << (std::lower_bound(universe.begin(), universe.end(), x) -
                           universe.begin());
        }
        return mask;
    };
    std::vector<std::uint32_t> full_masks, sub_masks;
    for (const Member& m : full.members()) full_masks.push_back(to_mask(m));
    for (const Member& m : sub.members()) sub_masks.push_back(to_mask(m));

    for (int size = 0; size <= q; ++size) {
        if (!check_blockers(full_masks, sub_masks, universe.size(), 0, 0, size)) return false;
    }
    return true;
}

namespace {

// State for the greedy prune. The drop test for member m against the current
// family Q (which is q-representative for the input by induction) uses the
// equivalent transversal form: Q \ {m} stops being q-representative iff some
// B with |B| <= q avoids m and hits every other current member. This needs no
// blocker enumeration over the universe, so it scales past the exhaustive
// checker's guard.
struct Pruner {
    std::vector<std::vector<std::uint16_t>> members;     // compact element ids
    std::vector<std::vector<std::uint32_t>> containing;  // element -> member indices
    std::vector<bool> alive;
    std::vector<int> hits;          // chosen-element hits per member
    std::vector<bool> in_dropped;   // compact element ∈ member being dropped
    int budget = 0;
    std::size_t drop_index = 0;

    bool transversal_exists() {
        std::size_t first_unhit = members.size();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i != drop_index && alive[i] && hits[i] == 0) {
                first_unhit = i;
                break;
            }
        }
        if (first_unhit == members.size()) return true;  // every other member hit
        if (budget == 0) return false;
        --budget;
        for (std::uint16_t e : members[first_unhit]) {
            if (in_dropped[e]) continue;
            for (std::uint32_t mi : containing[e]) ++hits[mi];
            bool ok = transversal_exists();
            for (std::uint32_t mi : containing[e]) --hits[mi];
            if (ok) {
                ++budget;
                return true;
            }
        }
        ++budget;
        return false;
    }
};

}  // namespace

SetFamily minimize(const SetFamily& full, int q, const RepfamLimits& limits) {
    if (q < 0) throw std::invalid_argument("q must be non-negative");
    const std::size_t p = full.max_member_size();
    std::uint64_t bound = binomial(static_cast<unsigned>(p + q), static_cast<unsigned>(p));
    if (bound > limits.max_bound) {
        throw Error("minimize guard exceeded: binom(p+q, p) = " + std::to_string(bound));
    }
    if (full.size() <= 1) return full;

    // Compact element ids over the family's union.
    const std::vector<NodeId>& universe = full.universe_hint();
    auto compact = [&](NodeId x) {
        return static_cast<std::uint16_t>(
            std::lower_bound(universe.begin(), universe.end(), x) - universe.begin());
    };

    Pruner pr;
    pr.members.resize(full.size());
    pr.containing.resize(universe.size());
    for (std::size_t i = 0; i < full.size(); ++i) {
        for (NodeId x : full.members()[i]) {
            std::uint16_t e = compact(x);
            pr.members[i].push_back(e);
            pr.containing[e].push_back(static_cast<std::uint32_t>(i));
        }
    }
    pr.alive.assign(full.size(), true);
    pr.hits.assign(full.size(), 0);
    pr.in_dropped.assign(universe.size(), false);

    // Visit members in descending lexicographic order (members() is ascending).
    for (std::size_t r = full.size(); r-- > 0;) {
        pr.drop_index = r;
        pr.budget = q;
        for (std::uint16_t e : pr.members[r]) pr.in_dropped[e] = true;
        bool essential = pr.transversal_exists();
        for (std::uint16_t e : pr.members[r]) pr.in_dropped[e] = false;
        if (!essential) pr.alive[r] = false;
    }

    SetFamily out = full.has_witnesses() ? SetFamily::with_witnesses() : SetFamily();
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (!pr.alive[i]) continue;
        if (full.has_witnesses()) {
            out.add(full.members()[i], full.witness(i));
        } else {
            out.add(full.members()[i]);
        }
    }
    return out;
}

bool compose_check(const SetFamily& a, const SetFamily& b, const SetFamily& c, int q,
                   const RepfamLimits& limits) {
    bool ba = is_q_representative(b, a, q, limits);
    bool cb = is_q_representative(c, b, q, limits);
    if (!(ba && cb)) return true;  // implication holds vacuously
    return is_q_representative(c, a, q, limits);
}

}  // namespace congest
