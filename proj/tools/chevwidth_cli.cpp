// chevwidth: exact decomposition of SL(3)/Sp(4) matrices over F_q[t] into
// elementary root unipotents, with certified length bounds, plus the width
// bound calculator and the BFS word oracle.
//
// Exit codes: 0 success; 2 parse/usage error; 3 search exhausted;
// 4 budget exceeded; 5 internal validation failure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "chevwidth/bfs.hpp"
#include "chevwidth/bounds.hpp"
#include "chevwidth/harness.hpp"
#include "chevwidth/sl3.hpp"
#include "chevwidth/sp4.hpp"

using namespace chevwidth;
using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::endl;
    } else {
        std::ofstream out(path);
        out << text << std::endl;
    }
}

int run_decompose(const std::string& group, const std::string& input, const std::string& outpath) {
    json j = read_json_file(input);
    GroupMatrix m = matrix_from_json(j);
    DecompositionReport rep;
    GroupKind kind;
    if (group == "sl3") {
        kind = GroupKind::SL;
        rep = sl3::decompose_sl3(m);
    } else {
        kind = GroupKind::SP;
        rep = sp4::decompose_sp4(m);
    }
    write_output(outpath, report_to_json(rep, kind).dump(2));
    size_t headline = group == "sl3" ? 44 : 90;
    return (rep.verified && rep.total_length <= static_cast<int>(headline)) ? 0 : 4;
}

int run_verify(const std::string& word_path, const std::string& matrix_path) {
    json jm = read_json_file(matrix_path);
    GroupMatrix m = matrix_from_json(jm);
    json jw = read_json_file(word_path);
    Word w = word_from_json(jw, m.field());
    GroupMatrix got = eval_word(w, m.field(), m.n(), m.kind());
    json out;
    out["match"] = (got == m);
    out["word_length"] = w.length();
    std::cout << out.dump(2) << std::endl;
    return got == m ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bounded elementary decomposition over F_q[t]"};
    app.require_subcommand(1);

    // decompose
    auto* dec = app.add_subcommand("decompose", "decompose a matrix into elementary letters");
    std::string group = "sl3", input, outpath;
    uint64_t q = 2;
    dec->add_option("--group", group)->check(CLI::IsMember({"sl3", "sp4"}))->required();
    dec->add_option("--q", q, "field size (informational; the input file pins it)");
    dec->add_option("--input", input)->required();
    dec->add_option("--out", outpath);
    dec->add_option("--seed", q, "unused; reports are deterministic")->group("");

    // verify
    auto* ver = app.add_subcommand("verify", "check that a word evaluates to a matrix");
    std::string word_path, matrix_path;
    ver->add_option("--word", word_path)->required();
    ver->add_option("--matrix", matrix_path)->required();

    // sample
    auto* smp = app.add_subcommand("sample", "run a reproducible scramble suite");
    ScrambleSpec spec;
    std::string sgroup = "sl3", stats_out, tsv_out;
    smp->add_option("--group", sgroup)->check(CLI::IsMember({"sl3", "sp4"}));
    smp->add_option("--q", spec.q);
    smp->add_option("--len", spec.scramble_len);
    smp->add_option("--degree-cap", spec.degree_cap);
    smp->add_option("--count", spec.count);
    smp->add_option("--seed", spec.seed);
    smp->add_option("--out", stats_out);
    smp->add_option("--tsv", tsv_out);

    // bounds
    auto* bnd = app.add_subcommand("bounds", "explicit width bound lookup");
    std::string rs_token, case_token = "function_explicit";
    long l2 = 44;
    bnd->add_option("--root-system", rs_token)->required();
    bnd->add_option("--case", case_token)->required();
    bnd->add_option("--l2", l2, "SL(3) function-case constant (default 44)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "BFS shortest-word oracle");
    std::string target_path;
    int max_len = 4, param_deg = 0;
    orc->add_option("--target", target_path)->required();
    orc->add_option("--max-len", max_len);
    orc->add_option("--param-deg", param_deg, "parameter degree cap (0 = constants)");

    // commutator-check
    auto* com = app.add_subcommand("commutator-check", "verify the Chevalley commutator table");
    uint64_t cq = 3;
    int cdeg = 2;
    com->add_option("--q", cq);
    com->add_option("--degree-cap", cdeg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*dec) return run_decompose(group, input, outpath);
        if (*ver) return run_verify(word_path, matrix_path);
        if (*smp) {
            spec.group = sgroup == "sl3" ? GroupKind::SL : GroupKind::SP;
            SuiteStats stats = run_suite(spec);
            write_output(stats_out, suite_stats_json(stats));
            if (!tsv_out.empty()) write_output(tsv_out, suite_histogram_tsv(stats));
            size_t headline = sgroup == "sl3" ? 44 : 90;
            bool ok = stats.all_verified && stats.max_total <= static_cast<int>(headline);
            return ok ? 0 : 1;
        }
        if (*bnd) {
            WidthAnswer ans = width_bound(RootSystem::parse(rs_token), width_case_from_token(case_token), l2);
            json j;
            j["root_system"] = rs_token;
            j["case"] = case_token;
            if (ans.bound) j["bound"] = *ans.bound;
            if (ans.conditional_bound) j["conditional_bound"] = *ans.conditional_bound;
            j["existence_only"] = ans.existence_only;
            j["provenance"] = ans.provenance;
            std::cout << j.dump(2) << std::endl;
            return 0;
        }
        if (*orc) {
            json jm = read_json_file(target_path);
            GroupMatrix m = matrix_from_json(jm);
            GenSpec gens = param_deg <= 0 ? GenSpec::constants(m.field(), m.kind(), m.n())
                                          : GenSpec::bounded_degree(m.field(), m.kind(), m.n(), param_deg);
            auto res = bfs_min_word(m, gens, max_len);
            json j;
            if (res) {
                j["length"] = res->first;
                j["word"] = word_to_json(res->second, m.kind());
            } else {
                j["length"] = nullptr;
            }
            std::cout << j.dump(2) << std::endl;
            return 0;
        }
        if (*com) {
            auto checks = verify_commutator_table(Field::get(cq), cdeg);
            json j = json::array();
            for (const auto& c : checks)
                j.push_back({{"pair", c.pair}, {"relation", c.relation}, {"ok", c.ok}});
            std::cout << j.dump(2) << std::endl;
            return 0;
        }
    } catch (const SearchExhausted& e) {
        std::cerr << "search exhausted: " << e.what() << std::endl;
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << std::endl;
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << std::endl;
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
