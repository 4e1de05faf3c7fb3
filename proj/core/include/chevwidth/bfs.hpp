#pragma once

#include <optional>

#include "chevwidth/words.hpp"

namespace chevwidth {

/// Generator set for the Cayley-graph searches: all elementary generators of
/// the given group with parameters drawn from a finite set.
struct GenSpec {
    GroupKind kind;
    int n;
    std::vector<Poly> params;  // nonzero parameters (e.g. the constants of F_q^*)

    static GenSpec constants(const Field& f, GroupKind kind, int n);
    static GenSpec bounded_degree(const Field& f, GroupKind kind, int n, int maxdeg);
    std::vector<ElemGen> generators() const;
};

uint64_t bfs_node_cap();  // CHEVWIDTH_NODE_CAP env override, default 4e6

/// Breadth-first search over the Cayley graph from the identity, deterministic
/// letter order.  Returns a shortest word evaluating to `target` within
/// max_len, or nullopt if none exists in range.  Throws SearchExhausted when
/// the node cap is hit first.
std::optional<std::pair<int, Word>> bfs_min_word(const GroupMatrix& target, const GenSpec& gens,
                                                 int max_len);

/// Full-group BFS table over constant matrices (finite group), cached per
/// (kind, n, q).  Used to finish constant residuals with minimal words.
class ConstantGroupTable {
public:
    static const ConstantGroupTable& get(const Field& f, GroupKind kind, int n);
    // minimal word for a constant matrix; nullopt if not in the group table
    std::optional<Word> word_for(const GroupMatrix& constant_target) const;
    int diameter() const { return diameter_; }
    size_t size() const { return order_.size(); }

private:
    ConstantGroupTable(const Field& f, GroupKind kind, int n);

    uint64_t key_of(const GroupMatrix& m) const;
    const Field* field_;
    GroupKind kind_;
    int n_;
    int diameter_ = 0;
    std::vector<ElemGen> gens_;
    // key -> (distance, parent key, generator index); identity has parent = self
    struct Entry { int dist; uint64_t parent; int gen; };
    std::unordered_map<uint64_t, Entry> order_;
};

}  // namespace chevwidth
