#pragma once

#include "strato/configfile.hpp"
#include "strato/diagnostics.hpp"
#include "strato/dispersion.hpp"
#include "strato/recipes.hpp"

namespace strato {

struct ExperimentConfig {
    GridSpec grid = GridSpec::cubic(32);
    double nu = 0.05, nu_prime = 0.05, kappa = 1.0;
    std::vector<double> eps_list = {0.1, 0.05, 0.025, 0.0125};
    DataRecipe data;
    double trunc_m = 1.0 / 259, trunc_M = 1.0 / 1554;
    bool truncated_wave = false;  // delta = D - W^T (else D - W)
    std::vector<NormSpec> norms = {NormSpec::L2(), NormSpec::Linf()};
    SolverConfig solver;
    std::string out_dir = "out";

    void validate() const;
    static ExperimentConfig from_config(const ConfigFile& cfg);
};

struct EpsRow {
    double eps = 0;
    bool completed = false;
    std::string abort_reason;
    std::map<std::string, double> values;  // space-time norms, monitors
};

struct StudyResult {
    std::vector<EpsRow> rows;
    std::map<std::string, RateFit> fits;  // per recorded quantity
    std::map<std::string, bool> monotone;
    TheoreticalExponents reference;
    bool complete = false;
    bool pass = false;  // monotone + positive slope for the gated quantities
    std::string message;

    // re-derives fits and verdicts from the recorded rows only
    void finalize(const std::vector<std::string>& gated);
};

StudyResult run_convergence_study(const ExperimentConfig& cfg);

// re-run the verdict stage on a persisted series.csv (reproducibility contract)
StudyResult verdict_from_csv(const std::string& csv_path, const ExperimentConfig& cfg);

void write_series_csv(const std::string& path, const StudyResult& res);
void write_meta_json(const std::string& path, const ExperimentConfig& cfg,
                     const StudyResult& res);

// --- CLI study drivers ----------------------------------------------------------
struct ProptechStudyResult {
    RateFit sup_slope;       // log sup_beta I vs log sigma over [1e2, 1e6]
    RateFit witness_alpha;   // log (I(beta*) sigma^{1/4}) vs log alpha
    std::vector<double> sigmas, sup_values;
    std::vector<double> alphas, witness_values;
};
ProptechStudyResult run_proptech_study(double alpha = 1.0, double R = 10.0);

struct KernelStudyResult {
    RateFit slope;  // log sup_x3 |I| vs log sigma
    std::vector<double> sigmas, values;
    double linf_bound_margin = 0;  // max |I| / (0.7 R e^{-(nu+nu')(t+t') r^2/16})
};
KernelStudyResult run_kernel_study(const PhysParams& p, double xi_h, double r, double R,
                                   double t_plus_tp, const std::vector<double>& sigmas);

struct StrichartzStudyResult {
    StrichartzResult iso;    // L^4_t L^6
    StrichartzResult aniso;  // L^8_t L^{inf,2}_{v,h}
};
// Shipped scenario: localized oscillating data, |xi_h| >= 3 cut, nu = nu' = 0.02.
Field4 strichartz_scenario_data(const GridSpec& g);
StrichartzStudyResult run_strichartz_study(const GridSpec& g, double nu,
                                           const std::vector<double>& eps_list, double T);

}  // namespace strato
