#include "chevwidth/harness.hpp"

#include <sstream>

namespace chevwidth {

using nlohmann::json;

Scramble make_scramble(const ScrambleSpec& spec, int index) {
    const Field& F = Field::get(spec.q);
    // counter-based: every scramble draws from its own stream
    Rng rng(spec.seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(index) * 0xc2b2ae3d27d4eb4full + 1);
    Word w;
    if (spec.group == GroupKind::SL) {
        static const int pairs[6][2] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
        for (int k = 0; k < spec.scramble_len; ++k) {
            const int* pr = pairs[rng.below(6)];
            w.push(ElemGen::linear(pr[0], pr[1], rng.poly(F, spec.degree_cap)));
        }
        return {w, eval_word(w, F, 3, GroupKind::SL)};
    }
    static const RootC2 roots[8] = {RootC2::A, RootC2::B, RootC2::AB, RootC2::A2B,
                                    RootC2::NegA, RootC2::NegB, RootC2::NegAB, RootC2::NegA2B};
    for (int k = 0; k < spec.scramble_len; ++k)
        w.push(ElemGen::sp(roots[rng.below(8)], rng.poly(F, spec.degree_cap)));
    return {w, eval_word(w, F, 4, GroupKind::SP)};
}

SuiteStats run_suite(const ScrambleSpec& spec) {
    const Field& F = Field::get(spec.q);
    SuiteStats stats;
    stats.count = spec.count;
    for (int i = 0; i < spec.count; ++i) {
        Scramble s = make_scramble(spec, i);
        // ground-truth cross-check before decomposition is attempted
        GroupMatrix check = eval_word(s.ground_truth, F, spec.group == GroupKind::SL ? 3 : 4, spec.group);
        if (check != s.matrix) {
            stats.failures.emplace_back(i, "ground-truth word does not evaluate to the scramble");
            stats.all_verified = false;
            continue;
        }
        try {
            DecompositionReport rep = spec.group == GroupKind::SL ? sl3::decompose_sl3(s.matrix)
                                                                  : sp4::decompose_sp4(s.matrix);
            stats.length_histogram[rep.total_length]++;
            stats.max_total = std::max(stats.max_total, rep.total_length);
            stats.strategy_counts[rep.strategy]++;
            for (const auto& st : rep.stages) {
                auto& slot = stats.per_stage_max[st.name];
                slot = std::max(slot, st.used);
            }
            if (!rep.verified) {
                stats.all_verified = false;
                stats.failures.emplace_back(i, "report not verified");
            }
        } catch (const std::exception& e) {
            stats.all_verified = false;
            stats.failures.emplace_back(i, e.what());
        }
    }
    return stats;
}

std::string suite_stats_json(const SuiteStats& s) {
    json j;
    j["count"] = s.count;
    j["max_total"] = s.max_total;
    j["all_verified"] = s.all_verified;
    j["histogram"] = json::object();
    for (auto& [len, n] : s.length_histogram) j["histogram"][std::to_string(len)] = n;
    j["per_stage_max"] = json::object();
    for (auto& [name, n] : s.per_stage_max) j["per_stage_max"][name] = n;
    j["strategies"] = json::object();
    for (auto& [name, n] : s.strategy_counts) j["strategies"][name] = n;
    j["failures"] = json::array();
    for (auto& [idx, msg] : s.failures) j["failures"].push_back({{"index", idx}, {"error", msg}});
    return j.dump(2);
}

std::string suite_histogram_tsv(const SuiteStats& s) {
    std::ostringstream os;
    os << "length\tcount\n";
    for (auto& [len, n] : s.length_histogram) os << len << '\t' << n << '\n';
    return os.str();
}

json matrix_to_json(const GroupMatrix& m) {
    json j;
    const Field& F = m.field();
    j["q"] = F.q();
    if (F.e() > 1) {
        json mod = json::array();
        for (uint64_t c : F.modulus()) mod.push_back(c);
        j["ext_modulus"] = mod;
    }
    j["n"] = m.n();
    j["kind"] = m.kind() == GroupKind::SL ? "SL" : "SP";
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.n(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

GroupMatrix matrix_from_json(const json& j) {
    uint64_t q = j.at("q").get<uint64_t>();
    const Field* F;
    if (j.contains("ext_modulus")) {
        std::vector<uint64_t> mod = j.at("ext_modulus").get<std::vector<uint64_t>>();
        // explicit modulus: p is the leading prime of q
        uint64_t p = 2;
        for (uint64_t cand = 2; cand * cand <= q + 1; ++cand)
            if (q % cand == 0) { p = cand; break; }
        static std::vector<std::unique_ptr<Field>> keep;
        keep.push_back(std::make_unique<Field>(p, mod));
        F = keep.back().get();
    } else {
        F = &Field::get(q);
    }
    int n = j.at("n").get<int>();
    GroupKind kind = j.at("kind").get<std::string>() == "SP" ? GroupKind::SP : GroupKind::SL;
    GroupMatrix m(*F, n, kind);
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw DomainError("matrix JSON: wrong row count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw DomainError("matrix JSON: wrong column count");
        for (int k = 0; k < n; ++k) m.at(i, k) = Poly::parse(*F, rows[i][k].get<std::string>());
    }
    return m;
}

json word_to_json(const Word& w, GroupKind kind) {
    json j;
    j["kind"] = kind == GroupKind::SL ? "SL" : "SP";
    json letters = json::array();
    for (const auto& g : w.letters()) {
        json l;
        if (g.type == ElemGen::Type::Linear) {
            l["type"] = "linear";
            l["i"] = g.i;
            l["j"] = g.j;
        } else {
            l["type"] = "sp";
            l["root"] = root_name(g.root);
        }
        l["xi"] = g.xi.str();
        letters.push_back(l);
    }
    j["letters"] = letters;
    return j;
}

GroupKind word_kind_from_json(const json& j) {
    return j.at("kind").get<std::string>() == "SP" ? GroupKind::SP : GroupKind::SL;
}

Word word_from_json(const json& j, const Field& f) {
    Word w;
    for (const auto& l : j.at("letters")) {
        Poly xi = Poly::parse(f, l.at("xi").get<std::string>());
        if (l.at("type").get<std::string>() == "linear")
            w.push(ElemGen::linear(l.at("i").get<int>(), l.at("j").get<int>(), xi));
        else
            w.push(ElemGen::sp(root_from_name(l.at("root").get<std::string>()), xi));
    }
    return w;
}

json report_to_json(const DecompositionReport& r, GroupKind kind) {
    json j;
    j["word"] = word_to_json(r.word, kind);
    j["total"] = r.total_length;
    j["verified"] = r.verified;
    j["strategy"] = r.strategy;
    j["within_target"] = r.within_target;
    j["diagonal_fallback"] = r.diagonal_fallback;
    json stages = json::array();
    for (const auto& s : r.stages)
        stages.push_back({{"name", s.name},
                          {"paper_budget", s.paper_budget},
                          {"guaranteed_budget", s.guaranteed_budget},
                          {"used", s.used}});
    j["stages"] = stages;
    return j;
}

}  // namespace chevwidth
