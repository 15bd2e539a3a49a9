#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singeta/double_oracle.hpp"
#include "singeta/eta.hpp"

namespace singeta {

struct EtaPathResult {
    std::optional<EtaValue> exact;
    std::optional<double> value;
    std::string skipped_reason; // nonempty => path skipped
};

struct ConsistencyEntry {
    std::string path_a;
    std::string path_b;
    std::string status; // exact | within_1e-8 | documented_sign_discrepancy | skipped
};

struct AnalysisOptions {
    std::optional<std::vector<std::string>> variables;
    UnitEigenvalueSign convention = UnitEigenvalueSign::General;
    int threads = 1;
    long long oracle_mu_cap = 200;    // double-oracle size limit
    long long exact_path_mu_cap = 20000;
    bool run_naive = true;
    bool run_fast = true;
};

struct AnalysisReport {
    std::string input;
    std::string canonical;
    std::optional<std::vector<long long>> brieskorn_exponents;
    WeightSystem weights;
    long long mu = 0;
    std::vector<Monomial> lambda; // truncated to 200 entries
    long long lambda_total = 0;
    std::vector<Rational> spectrum; // truncated to 200 entries
    long long spectrum_total = 0;
    long long signature = 0;
    long long tau = 0;
    std::map<std::string, EtaPathResult> eta;
    std::vector<ConsistencyEntry> consistency;
    UnitEigenvalueSign convention = UnitEigenvalueSign::General;
    int threads = 1;
    long long timing_ms = 0;
    int exit_code = 0; // 0 all consistent, 3 documented discrepancy present
    std::vector<std::string> warnings;
};

AnalysisReport analyze_polynomial(const std::string& text, const AnalysisOptions& opt = {});
AnalysisReport analyze_brieskorn(const std::vector<long long>& a, AnalysisOptions opt);

std::string report_to_json(const AnalysisReport& r); // deterministic bytes
std::string report_to_text(const AnalysisReport& r);

// true when f = sum_j z_j^{a_j} with unit coefficients; fills a
bool brieskorn_form(const Polynomial& f, std::vector<long long>& a);

WeightSystem brieskorn_weights(const std::vector<long long>& a);

} // namespace singeta
