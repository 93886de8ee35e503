#pragma once

#include <string>
#include <vector>

#include "sympclif/spinor.hpp"

namespace sympclif {

struct SuiteParams {
    int n_max = 3;   // bracket identities run for n = 1..n_max (capped at 3)
    int h_max = 6;   // basis homogeneity bound
    int k_max = 8;   // basis index bound
    int degree = 3;  // symmetry ansatz degree
    int max_j = 4;   // spectral Laguerre degree bound
    int max_k = 3;   // spectral monogenic homogeneity bound
    int threads = 0; // 0: SYMPCLIF_THREADS env var, else hardware concurrency
};

struct CheckResult {
    std::string suite;
    std::string check_id;
    std::string anchor;  // the identity being checked, in formula form
    bool pass = false;
    std::string detail;
};

// Suites: commutators, bases, pairing, spectral, symmetry, all.
// Checks may run in parallel (capped by SYMPCLIF_THREADS); results come back
// sorted by (suite, check_id) so output is deterministic.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteParams& params = {});

std::string check_to_json_line(const CheckResult& r);

// Monogenic corpora used by the suites and the acceptance gate: closed-form
// basis elements for n = 1, slot products and nullspace elements for n = 2.
std::vector<Spinor> monogenic_corpus(int n, int h);

}  // namespace sympclif
