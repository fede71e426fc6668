#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/profile.hpp"
#include "hardcore/rational.hpp"
#include "hardcore/report.hpp"

namespace hardcore {

// Fugacity grid; when `constrained` the effective grid at order n is the
// subset with lambda < 2/(n-2) (vacuous for n <= 2).
struct LambdaGrid {
    std::vector<Rational> values;
    bool constrained = false;

    // Throws unless every value is positive.
    void validate() const;
    // The effective values at order n.
    std::vector<Rational> at_order(int n) const;
};

struct VerifyOptions {
    int threads = 1;
    // Seam for fault injection: replaces profile computation everywhere a
    // check consumes profiles. Defaults to the memoized implementation.
    std::function<IndependenceProfile(const Graph&)> profile_fn;
    // Ingested graph lists by order; orders beyond the internal
    // enumeration cap must be supplied here.
    std::map<int, std::vector<Graph>> graphs_by_order;
};

// E_G(lambda) <= E_{Z(n,alpha)}(lambda) over every graph with n <= n_max;
// equality holders are recorded and compared against Z(n,alpha).
VerificationReport check_theorem1(int n_max, const LambdaGrid& grid, const VerifyOptions& opts = {});

// E_G(lambda) >= E_{K_{n-alpha} v alpha K_1}(lambda) for lambda < 2/(n-2);
// equality holders recorded (uniqueness reported, never asserted).
VerificationReport check_theorem2(int n_max, const LambdaGrid& grid, const VerifyOptions& opts = {});

// P_G bounds from both extremal families; the lower bound only on the
// constrained part of the grid. At lambda = 1 the upper bound is checked
// against the independent-set count of the clique-union family.
VerificationReport check_corollary3(int n_max, const LambdaGrid& grid, const VerifyOptions& opts = {});

// V_G(lambda) >= lambda/(1+n lambda)^2, equality expected exactly at K_n.
VerificationReport check_theorem4(int n_max, const LambdaGrid& grid, const VerifyOptions& opts = {});

// V_G(lambda) >= lambda/(1+(Delta+1) lambda)^2 grouped by maximum degree.
VerificationReport check_theorem5(int n_max, const LambdaGrid& grid, const VerifyOptions& opts = {});

// For d-regular graphs on n vertices: F_G <= F_{K_{d,d}} and
// F_G >= F_{K_{d+1}}. Verdicts use exact cross-multiplied power
// comparisons; float values with 1e-9 slack are checked alongside.
VerificationReport check_free_energy_bounds(int d, int n, const LambdaGrid& grid,
                                            const VerifyOptions& opts = {});

// Mixture reconstruction, the subset-count inequality k i_k <= (n-k+1)
// i_{k-1}, the covariance double-sum identity, and the mixture variance
// lower bound Var(X) >= sum_t w_t Var(Y|Y<=t).
VerificationReport check_section31_identities(int n_max, const LambdaGrid& grid,
                                              const VerifyOptions& opts = {});

// Extension-set identities: E(phi) = E(X)/lambda, E(X phi) = E(X(X-1))/lambda,
// Cov(X,phi) = (Var-E X)/lambda, the ratio recurrence, eta monotonicity,
// and E(X) >= n lambda / (1+(Delta+1) lambda).
VerificationReport check_section32_identities(int n_max, const LambdaGrid& grid,
                                              const VerifyOptions& opts = {});

struct FreeEnergyCase {
    int d = 0;
    int n = 0;
};

struct VerifierConfig {
    LambdaGrid lambda_grid;
    int theorem1_n_max = 6;
    int theorem2_n_max = 6;
    int corollary3_n_max = 6;
    int theorem4_n_max = 6;
    int theorem5_n_max = 6;
    int section31_n_max = 6;
    int section32_n_max = 6;
    int var_de_n_max = 12;
    std::vector<Rational> var_de_p_grid;
    std::vector<FreeEnergyCase> free_energy_cases;
    std::map<int, std::string> graph6_files;  // order -> path
};

VerifierConfig default_verifier_config();
// Parses the JSON schema documented in the README; unknown keys are an
// error, malformed grids or nonpositive lambdas are configuration errors.
VerifierConfig parse_verifier_config(const std::string& json_text);

// Runs every configured check; deterministic aggregate ordering.
std::vector<VerificationReport> run_all(const VerifierConfig& config, VerifyOptions opts = {});

}  // namespace hardcore
