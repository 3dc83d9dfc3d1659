#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hoffman/matrix.hpp"

namespace hoffman {

// Exact verification of the forbidden-subgraph matrix families and their
// kernel identities. Every check is rational arithmetic with zero tolerance;
// each function returns true iff all of its assertions hold and throws
// InputError on malformed parameters.

// Tridiagonal path matrix with -2 at both ends: Equal at -3 when all middle
// diagonal entries are -1, Equal-or-Less otherwise. Also checks that sign
// switching normalizes the off-diagonal to +1.
bool verify_path_lemma(int n, const std::vector<int>& signs,
                       const std::vector<Rational>& middles);

// D_n family (path with a split end) and its explicit kernel vector.
bool verify_Dn_lemma(int n, const std::vector<int>& signs);

// Path glued to K_{1,1,2}; (n+3)x(n+3) matrix with {eps, delta} = {0, 1} and
// kernel vector whose last coordinate is 2(eps-1)/(eps-2).
bool verify_path_clique_lemma(int n, const std::vector<int>& signs, int eps);

// Cycle with an even number of (+)-edges: kernel vector, plus the switched
// circulant (-1,1,0,...,0,1) for even n and the fixed 3x3 for odd n.
bool verify_cycle_lemma(int n, const std::vector<int>& signs);

// Path joined to a cycle through a (+)-triangle; cycle (+)-count odd.
bool verify_path_cycle_lemma(int m, int n, const std::vector<int>& path_signs,
                             const std::vector<int>& cycle_signs);

struct LemmaReportEntry {
    std::string lemma;
    nlohmann::json params;
    std::string verdict;  // expected verdict description
    bool pass;
    nlohmann::json counterexample;  // full matrix of the first failure, if any

    nlohmann::json to_json() const;
};

// The displayed constant matrices: non-adjacent-neighbor triples, signed
// triangles, the marked-triangle cases (a)(b)(d), the cut-vertex 3x3 family,
// the claw 4x4 families, the K_{1,1,2} 4x4 family over all 32 sign patterns,
// and the cycle-remark 3x3.
std::vector<LemmaReportEntry> verify_fixed_matrix_lemmas();

struct LemmaSweepBounds {
    int path_max = 6;        // path lemma sizes
    int dn_max = 10;         // D_n sizes (all 2^{n-1} sign patterns)
    int path_clique_max = 8; // path length in the path+K_{1,1,2} family
    int cycle_max = 10;      // cycle lengths (all valid-parity patterns)
    int path_cycle_max = 10; // m+n bound for the path+cycle family
};

// Full exhaustive sweep; one summary entry per (lemma, size) plus the fixed
// matrices. Any failing case is recorded with its full matrix.
std::vector<LemmaReportEntry> run_lemma_suite(const LemmaSweepBounds& b = {});

nlohmann::json lemma_report_json(const std::vector<LemmaReportEntry>& entries);

}  // namespace hoffman
