#ifndef CONGEST_REPFAM_HPP
#define CONGEST_REPFAM_HPP

#include <optional>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

// A member is a sorted set of node ids; a witness is an arbitrary id sequence
// whose interpretation is up to the producer (e.g. a path in traversal order).
using Member = std::vector<NodeId>;
using Witness = std::vector<NodeId>;

// Collection of distinct id-sets, optionally annotated with one witness per
// member. Members are kept sorted (ascending lexicographic) and deduplicated;
// on duplicate insertion the first witness wins.
class SetFamily {
public:
    SetFamily() = default;
    static SetFamily with_witnesses();

    // `m` may be unsorted; it is normalized. Returns false if the set was
    // already present (the existing witness is kept).
    bool add(Member m);
    bool add(Member m, Witness w);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const Member& m) const;

    const std::vector<Member>& members() const { return members_; }
    bool has_witnesses() const { return witnesses_.has_value(); }
    const Witness& witness(std::size_t i) const;

    // Union of all member elements (== universe_hint unless a larger hint was
    // declared up front).
    const std::vector<NodeId>& universe_hint() const { return universe_; }
    void declare_universe(std::vector<NodeId> elements);

    std::size_t max_member_size() const;

    bool operator==(const SetFamily& other) const { return members_ == other.members_; }

private:
    std::vector<Member> members_;  // sorted, distinct
    std::optional<std::vector<Witness>> witnesses_;
    std::vector<NodeId> universe_;  // sorted, distinct

    void absorb_elements(const Member& m);
};

struct RepfamLimits {
    std::size_t max_union = 20;  // exhaustive blocker check guard
    int max_q = 6;
    std::size_t max_bound = 1000000;  // binom(p+q, p) guard for minimize
};

// Definition check: true iff for every blocker B with |B| <= q drawn from the
// union of `full`'s elements, whenever some member of `full` avoids B, some
// member of `sub` avoids B too. Exhaustive over blockers; guarded.
// Requires sub.members ⊆ full.members.
bool is_q_representative(const SetFamily& sub, const SetFamily& full, int q,
                         const RepfamLimits& limits = {});

// Inclusion-minimal q-representative subfamily of `full`: members are visited
// in descending lexicographic order and dropped whenever the remainder is
// still q-representative for `full`. Witnesses of survivors are preserved.
// The result has size at most binom(p+q, p) where p = max member size.
SetFamily minimize(const SetFamily& full, int q, const RepfamLimits& limits = {});

// Test-harness transitivity probe: given c ⊆ b ⊆ a, returns whether the
// implication (b rep-for a) ∧ (c rep-for b) ⇒ (c rep-for a) held.
bool compose_check(const SetFamily& a, const SetFamily& b, const SetFamily& c, int q,
                   const RepfamLimits& limits = {});

// binom(n, k) with saturation, used for family size bounds.
std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace congest

#endif
