#include "hestam/model.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

#include "hestam/errors.hpp"

namespace hestam {

namespace {

void require_finite(std::vector<std::string>& issues, const char* name, double x) {
    if (!std::isfinite(x)) issues.push_back(std::string(name) + " must be finite");
}

}  // namespace

ModelParams::ModelParams(double kappa_, double theta_, double xi_, double rho_, double v0_,
                         double lambda_)
    : kappa(kappa_), theta(theta_), xi(xi_), rho(rho_), v0(v0_), lambda(lambda_) {
    std::vector<std::string> issues;
    require_finite(issues, "kappa", kappa);
    require_finite(issues, "theta", theta);
    require_finite(issues, "xi", xi);
    require_finite(issues, "rho", rho);
    require_finite(issues, "v0", v0);
    require_finite(issues, "lambda", lambda);
    if (!(kappa > 0.0)) issues.push_back("kappa must be > 0");
    if (!(theta > 0.0)) issues.push_back("theta must be > 0");
    if (!(xi >= 0.0)) issues.push_back("xi must be >= 0");
    if (!(v0 >= 0.0)) issues.push_back("v0 must be >= 0");
    if (!(rho >= -1.0 && rho <= 1.0)) issues.push_back("rho must lie in [-1, 1]");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

MarketParams::MarketParams(double r_, double q_, double mu_) : r(r_), q(q_), mu(mu_) {
    std::vector<std::string> issues;
    require_finite(issues, "r", r);
    require_finite(issues, "q", q);
    require_finite(issues, "mu", mu);
    if (!(r >= 0.0)) issues.push_back("r must be >= 0 (negative rates unsupported)");
    if (!(q >= 0.0)) issues.push_back("q must be >= 0 (negative yields unsupported)");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

OptionSpec::OptionSpec(double strike_, double maturity_, OptionKind kind_)
    : strike(strike_), maturity(maturity_), kind(kind_) {
    std::vector<std::string> issues;
    require_finite(issues, "strike", strike);
    require_finite(issues, "maturity", maturity);
    if (!(strike > 0.0)) issues.push_back("strike must be > 0");
    if (!(maturity > 0.0)) issues.push_back("maturity must be > 0");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

std::pair<double, double> derived_coefficients(const ModelParams& m) {
    return {m.alpha(), m.beta()};
}

bool check_feller(const ModelParams& m) {
    return 2.0 * m.kappa * m.theta >= m.xi * m.xi;
}

double intrinsic(const OptionSpec& opt, double s) {
    return opt.kind == OptionKind::Call ? std::max(s - opt.strike, 0.0)
                                        : std::max(opt.strike - s, 0.0);
}

const char* to_string(OptionKind kind) {
    return kind == OptionKind::Call ? "call" : "put";
}

OptionKind option_kind_from_string(const std::string& s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "call") return OptionKind::Call;
    if (lower == "put") return OptionKind::Put;
    throw ValidationError("kind must be 'call' or 'put', got '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& key, const std::string& value,
                    std::vector<std::string>& issues) {
    try {
        size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing text");
        return x;
    } catch (const std::exception&) {
        issues.push_back(key + ": cannot parse number '" + value + "'");
        return 0.0;
    }
}

}  // namespace

ContractParams contract_from_pairs(
    const std::vector<std::pair<std::string, std::string>>& kv) {
    static const std::vector<std::string> known = {"kappa", "theta",  "xi",       "rho",
                                                   "v0",    "lambda", "r",        "q",
                                                   "mu",    "strike", "maturity", "kind"};
    std::vector<std::string> issues;
    std::map<std::string, std::string> values;
    for (const auto& [key, value] : kv) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            issues.push_back("unknown key '" + key + "'");
            continue;
        }
        if (!values.emplace(key, value).second)
            issues.push_back("duplicate key '" + key + "'");
    }
    for (const auto& key : known) {
        if (key == "lambda" || key == "mu") continue;  // optional, default 0
        if (!values.count(key)) issues.push_back("missing key '" + key + "'");
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));

    auto num = [&](const char* key, double fallback = 0.0) {
        auto it = values.find(key);
        return it == values.end() ? fallback : parse_number(key, it->second, issues);
    };
    const double kappa = num("kappa"), theta = num("theta"), xi = num("xi");
    const double rho = num("rho"), v0 = num("v0"), lambda = num("lambda");
    const double r = num("r"), q = num("q"), mu = num("mu");
    const double strike = num("strike"), maturity = num("maturity");
    if (!issues.empty()) throw ValidationError(std::move(issues));

    const OptionKind kind = option_kind_from_string(values.at("kind"));
    return ContractParams{ModelParams(kappa, theta, xi, rho, v0, lambda),
                          MarketParams(r, q, mu), OptionSpec(strike, maturity, kind)};
}

ContractParams load_contract(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::vector<std::string> issues;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            issues.push_back("line " + std::to_string(lineno) + ": expected 'key = value'");
            continue;
        }
        kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return contract_from_pairs(kv);
}

}  // namespace hestam
