#pragma once

namespace gbt::linalg {

// Numerical thresholds shared by every operator check.
//   eq_tol   entrywise max-norm bound for operator equality
//   psd_tol  eigenvalues in [-psd_tol, psd_tol] count as zero
class ToleranceConfig {
public:
    static constexpr double kDefaultEqTol = 1e-9;
    static constexpr double kDefaultPsdTol = 1e-10;

    ToleranceConfig() = default;
    ToleranceConfig(double eq_tol, double psd_tol);

    double eq_tol() const noexcept { return eq_tol_; }
    double psd_tol() const noexcept { return psd_tol_; }

private:
    double eq_tol_ = kDefaultEqTol;
    double psd_tol_ = kDefaultPsdTol;
};

}  // namespace gbt::linalg
