#include "chevwidth/bounds.hpp"

namespace chevwidth {

RootSystem RootSystem::parse(const std::string& token) {
    if (token.size() < 2) throw DomainError("bad root system token: " + token);
    char fam = token[0];
    if (fam >= 'a' && fam <= 'g') fam = static_cast<char>(fam - 'a' + 'A');
    int rank = std::stoi(token.substr(1));
    RootSystem rs{fam, rank};
    if (!rs.admissible()) throw DomainError("inadmissible root system: " + token);
    return rs;
}

bool RootSystem::admissible() const {
    switch (family) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 3;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

int positive_root_count(const RootSystem& rs) {
    if (!rs.admissible()) throw DomainError("inadmissible root system");
    int l = rs.rank;
    switch (rs.family) {
        case 'A': return l * (l + 1) / 2;
        case 'B':
        case 'C': return l * l;
        case 'D': return l * (l - 1);
        case 'G': return 6;
        case 'F': return 24;
        case 'E': return l == 6 ? 36 : (l == 7 ? 63 : 120);
    }
    throw DomainError("inadmissible root system");
}

WidthCase width_case_from_token(const std::string& token) {
    if (token == "units_infinite_number") return WidthCase::UnitsInfiniteNumber;
    if (token == "units_infinite_function") return WidthCase::UnitsInfiniteFunction;
    if (token == "function_explicit") return WidthCase::FunctionExplicit;
    if (token == "number_general") return WidthCase::NumberGeneral;
    throw DomainError("unknown width case: " + token);
}

std::string width_case_token(WidthCase c) {
    switch (c) {
        case WidthCase::UnitsInfiniteNumber: return "units_infinite_number";
        case WidthCase::UnitsInfiniteFunction: return "units_infinite_function";
        case WidthCase::FunctionExplicit: return "function_explicit";
        case WidthCase::NumberGeneral: return "number_general";
    }
    return "?";
}

WidthAnswer width_bound(const RootSystem& rs, WidthCase wcase, long l2) {
    if (!rs.admissible()) throw DomainError("inadmissible root system");
    if (rs.rank < 2 && !(rs.family == 'A' && rs.rank >= 1))
        throw DomainError("width table covers rank >= 2 (and A1 only via rank-1 SL2 results)");
    long N = positive_root_count(rs);
    WidthAnswer ans;
    switch (wcase) {
        case WidthCase::UnitsInfiniteNumber:
            ans.bound = 7 * N;
            ans.provenance = "7N for infinite unit groups, number case";
            return ans;
        case WidthCase::UnitsInfiniteFunction:
            ans.bound = 8 * N;
            ans.provenance = "8N for infinite unit groups, function case";
            return ans;
        case WidthCase::NumberGeneral:
            ans.existence_only = true;
            ans.provenance = "uniform bound exists (ultraproduct argument); no explicit value";
            return ans;
        case WidthCase::FunctionExplicit:
            break;
    }
    // function case, explicit table anchored at L(2) = l2
    if (rs.family == 'A') {
        if (rs.rank < 2) throw DomainError("A1 has no explicit function-case entry here");
        // stability recurrence L(l) <= L(l-1) + 3l + 1
        long L = l2;
        for (int k = 3; k <= rs.rank; ++k) L += 3 * k + 1;
        ans.bound = L;
        ans.provenance = rs.rank == 2 ? "SL(3) function-case bound L(2)"
                                      : "A-family stability recurrence L(l) <= L(l-1) + 3l + 1 from L(2)";
        return ans;
    }
    if (rs.family == 'D' || rs.family == 'E' || rs.family == 'F') {
        ans.bound = l2 * N;
        ans.provenance = "simply-laced / F4 unitriangular reduction: L(2) * N";
        return ans;
    }
    if (rs.family == 'G') {
        ans.bound = l2 + 20;
        ans.provenance = "G2 reduction: L(2) + 20";
        return ans;
    }
    if (rs.family == 'B') {
        if (rs.rank == 2) {
            // B2 = C2 as root systems
            ans.bound = 90;
            ans.conditional_bound = 87;
            ans.provenance = "Sp(4) function-case bound (87 when the localization step is skipped)";
            return ans;
        }
        if (rs.rank == 3) {
            ans.bound = l2 + 41;
            ans.provenance = "B3 reduction: L(2) + 41";
            return ans;
        }
        ans.existence_only = true;
        ans.provenance = "B_l (l >= 4): stability reduction to B3 with no explicit additive constant";
        return ans;
    }
    if (rs.family == 'C') {
        if (rs.rank == 2) {
            ans.bound = 90;
            ans.conditional_bound = 87;
            ans.provenance = "Sp(4) function-case bound (87 when the localization step is skipped)";
            return ans;
        }
        if (rs.rank == 3) {
            ans.bound = l2 + 40;
            ans.provenance = "C3 reduction: L(2) + 40";
            return ans;
        }
        ans.existence_only = true;
        ans.provenance = "C_l (l >= 4): stability reduction to C3 with no explicit additive constant";
        return ans;
    }
    throw DomainError("inadmissible root system");
}

}  // namespace chevwidth
