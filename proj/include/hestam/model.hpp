#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hestam {

enum class OptionKind { Call, Put };

enum class Measure { RiskNeutral, Physical };

/// Heston dynamics parameters. Validated on construction: a ModelParams
/// value that exists is usable everywhere downstream.
///
///   dS = mu S dt + sqrt(V) S dz1
///   dV = kappa (theta - V) dt + xi sqrt(V) dz2,   corr(dz1, dz2) = rho
struct ModelParams {
    double kappa;        // mean-reversion rate (1/year)
    double theta;        // long-run variance
    double xi;           // vol-of-vol
    double rho;          // driver correlation
    double v0;           // initial variance
    double lambda = 0.0; // volatility risk premium

    ModelParams(double kappa, double theta, double xi, double rho, double v0,
                double lambda = 0.0);

    // Derived coefficients, always recomputed.
    double alpha() const { return kappa * theta; }
    double beta() const { return kappa + lambda; }
};

struct MarketParams {
    double r;        // risk-free rate (1/year)
    double q;        // continuous dividend yield (1/year)
    double mu = 0.0; // physical drift, used only under Measure::Physical

    MarketParams(double r, double q, double mu = 0.0);
};

struct OptionSpec {
    double strike;
    double maturity; // years
    OptionKind kind;

    OptionSpec(double strike, double maturity, OptionKind kind);
};

/// (alpha, beta) = (kappa * theta, kappa + lambda).
std::pair<double, double> derived_coefficients(const ModelParams& m);

/// True iff 2 kappa theta >= xi^2. False is a warning, not an error:
/// simulation still runs (variance truncation handles boundary hits).
bool check_feller(const ModelParams& m);

/// Immediate exercise payoff.
double intrinsic(const OptionSpec& opt, double s);

const char* to_string(OptionKind kind);
OptionKind option_kind_from_string(const std::string& s);

/// Model + market + contract block loaded from a flat key-value file.
struct ContractParams {
    ModelParams model;
    MarketParams market;
    OptionSpec option;
};

/// Parses "key = value" lines with keys kappa, theta, xi, rho, v0, lambda,
/// r, q, mu, strike, maturity, kind. lambda and mu default to 0; everything
/// else is required. Unknown keys are an error (catch typos); all offending
/// keys are reported at once.
ContractParams load_contract(std::istream& in);
ContractParams contract_from_pairs(const std::vector<std::pair<std::string, std::string>>& kv);

}  // namespace hestam
