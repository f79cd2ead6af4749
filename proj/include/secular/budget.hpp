#pragma once
// Size budgets shared by the compute modules. Every budgeted operation takes
// one of these (defaulted) and raises budget_error instead of thrashing.
namespace secular {

struct Budget {
    long long max_kn = 160;                 // moment table: k*N
    long long max_dp_states = 10'000'000;   // monotone-column states in the lattice DP
    long long max_dp_cells = 30'000'000;    // DP cells = states * (kN+1)
    int max_gamma_k = 4;                    // piecewise gamma reconstruction
    long long max_ff_codes = 100'000'000;   // q^n for the F_q[t] sweep
    long long max_residue_tables = 1'000'000; // discrete-log table size per character group
};

} // namespace secular
