#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "malmquist/model_space.hpp"
#include "malmquist/rng.hpp"

namespace malmquist {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double runtime_s = 0.0;
    double runtime_limit_s = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20250808;
    bool quick = false;  // reduced trial counts, same assertions
};

/// Runs the whole verification suite, one pass/fail line per criterion on
/// `log`. Returns the per-criterion results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& log);

bool all_pass(const std::vector<CriterionResult>& results);

std::string acceptance_csv(const std::vector<CriterionResult>& results);

// Deterministic instance generators shared by the suite and the unit tests.
Sigma random_sigma(Rng& rng, int max_n, double max_r, bool allow_mult = true);
Sigma random_sigma_exact(Rng& rng, int n, double max_r, bool allow_mult = true);
Sigma random_distinct_sigma(Rng& rng, int max_n, double max_r, double min_gap = 0.05);
TaylorSeries random_polynomial(Rng& rng, int degree, bool unit_h2 = true);
MalmquistRep random_rep(Rng& rng, const std::shared_ptr<const MalmquistBasis>& basis);

}  // namespace malmquist
