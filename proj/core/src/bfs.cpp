#include "chevwidth/bfs.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace chevwidth {

GenSpec GenSpec::constants(const Field& f, GroupKind kind, int n) {
    GenSpec s{kind, n, {}};
    for (uint64_t c = 1; c < f.q(); ++c) s.params.push_back(Poly::constant(f, c));
    return s;
}

GenSpec GenSpec::bounded_degree(const Field& f, GroupKind kind, int n, int maxdeg) {
    GenSpec s{kind, n, {}};
    uint64_t count = 1;
    for (int i = 0; i <= maxdeg; ++i) count *= f.q();
    for (uint64_t idx = 1;; ++idx) {  // graded-lex enumeration skips 0 at idx 0
        Poly p = graded_lex_poly(f, idx);
        if (p.deg() > maxdeg) break;
        s.params.push_back(p);
        if (idx > count + 8) break;
    }
    return s;
}

std::vector<ElemGen> GenSpec::generators() const {
    std::vector<ElemGen> gens;
    if (kind == GroupKind::SL) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                for (const auto& p : params) gens.push_back(ElemGen::linear(i, j, p));
            }
    } else {
        static const RootC2 roots[8] = {RootC2::A, RootC2::B, RootC2::AB, RootC2::A2B,
                                        RootC2::NegA, RootC2::NegB, RootC2::NegAB, RootC2::NegA2B};
        for (auto r : roots)
            for (const auto& p : params) gens.push_back(ElemGen::sp(r, p));
    }
    return gens;
}

uint64_t bfs_node_cap() {
    if (const char* env = std::getenv("CHEVWIDTH_NODE_CAP")) {
        uint64_t v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return 4000000;
}

namespace {

struct MatHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

std::vector<uint64_t> mat_fingerprint(const GroupMatrix& m) {
    std::vector<uint64_t> v;
    v.reserve(m.n() * m.n() * 2);
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const Poly& p = m.at(i, j);
            v.push_back(0x80000000ull + p.coeffs().size());
            for (uint64_t c : p.coeffs()) v.push_back(c);
        }
    return v;
}

}  // namespace

std::optional<std::pair<int, Word>> bfs_min_word(const GroupMatrix& target, const GenSpec& gens,
                                                 int max_len) {
    const Field& F = target.field();
    auto gen_list = gens.generators();
    GroupMatrix id = GroupMatrix::identity(F, gens.n, gens.kind);
    if (target == id) return std::make_pair(0, Word{});

    struct Node {
        GroupMatrix m;
        int parent;
        int gen;
        int dist;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::vector<uint64_t>, int, MatHash> seen;
    nodes.push_back({id, -1, -1, 0});
    seen.emplace(mat_fingerprint(id), 0);
    uint64_t cap = bfs_node_cap();

    for (size_t head = 0; head < nodes.size(); ++head) {
        Node cur = nodes[head];
        if (cur.dist >= max_len) continue;
        for (size_t gi = 0; gi < gen_list.size(); ++gi) {
            GroupMatrix nxt = cur.m * eval_gen(gen_list[gi], F, gens.n, gens.kind);
            auto fp = mat_fingerprint(nxt);
            if (seen.count(fp)) continue;
            int idx = static_cast<int>(nodes.size());
            seen.emplace(std::move(fp), idx);
            nodes.push_back({nxt, static_cast<int>(head), static_cast<int>(gi), cur.dist + 1});
            if (nxt == target) {
                Word w;
                std::vector<int> chain;
                for (int at = idx; at > 0; at = nodes[at].parent) chain.push_back(nodes[at].gen);
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) w.push(gen_list[*it]);
                return std::make_pair(cur.dist + 1, w);
            }
            if (nodes.size() > cap)
                throw SearchExhausted("bfs_min_word: node cap " + std::to_string(cap) + " exceeded");
        }
    }
    return std::nullopt;
}

ConstantGroupTable::ConstantGroupTable(const Field& f, GroupKind kind, int n)
    : field_(&f), kind_(kind), n_(n) {
    GenSpec spec = GenSpec::constants(f, kind, n);
    gens_ = spec.generators();
    GroupMatrix id = GroupMatrix::identity(f, n, kind);
    uint64_t idk = key_of(id);
    order_.emplace(idk, Entry{0, idk, -1});
    std::deque<GroupMatrix> queue{id};
    uint64_t cap = bfs_node_cap() * 4;
    while (!queue.empty()) {
        GroupMatrix cur = std::move(queue.front());
        queue.pop_front();
        int d = order_.at(key_of(cur)).dist;
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            GroupMatrix nxt = cur * eval_gen(gens_[gi], f, n, kind);
            uint64_t k = key_of(nxt);
            if (order_.count(k)) continue;
            order_.emplace(k, Entry{d + 1, key_of(cur), static_cast<int>(gi)});
            diameter_ = std::max(diameter_, d + 1);
            queue.push_back(std::move(nxt));
            if (order_.size() > cap)
                throw SearchExhausted("constant group table exceeds node cap");
        }
    }
}

uint64_t ConstantGroupTable::key_of(const GroupMatrix& m) const {
    uint64_t k = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Poly& p = m.at(i, j);
            k = k * field_->q() + p.constant_value();
        }
    return k;
}

const ConstantGroupTable& ConstantGroupTable::get(const Field& f, GroupKind kind, int n) {
    static std::mutex mu;
    static std::map<std::tuple<uint64_t, int, int>, std::unique_ptr<ConstantGroupTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(f.q(), static_cast<int>(kind), n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::unique_ptr<ConstantGroupTable>(new ConstantGroupTable(f, kind, n)))
                 .first;
    }
    return *it->second;
}

std::optional<Word> ConstantGroupTable::word_for(const GroupMatrix& target) const {
    if (!target.entries_constant()) return std::nullopt;
    uint64_t k = key_of(target);
    auto it = order_.find(k);
    if (it == order_.end()) return std::nullopt;
    std::vector<int> chain;
    uint64_t at = k;
    while (order_.at(at).gen >= 0) {
        chain.push_back(order_.at(at).gen);
        at = order_.at(at).parent;
    }
    Word w;
    for (auto it2 = chain.rbegin(); it2 != chain.rend(); ++it2) w.push(gens_[*it2]);
    return w;
}

}  // namespace chevwidth
