#pragma once

#include <string>
#include <vector>

namespace wardrop {

enum class CostKind { Polynomial, Bpr, Constant };

/// Travel-cost function of flow: polynomial (up to quartic), BPR, or constant.
/// Values are time units, arguments are flow units. Construction rejects
/// functions that are negative or decreasing anywhere on [0, domain_max]
/// (checked on a grid).
class CostFunction {
public:
    static CostFunction polynomial(std::vector<double> coefficients, double domain_max);
    static CostFunction bpr(double free_flow_time, double capacity, double b, double power,
                            double domain_max);
    static CostFunction constant(double value);

    double value(double x) const;
    /// Exact integral of value() from 0 to x (closed form).
    double integral(double x) const;
    double derivative(double x) const;
    /// Marginal cost m(x) = value(x) + x * derivative(x), in the same family.
    CostFunction marginal() const;

    CostKind kind() const { return kind_; }
    double domain_max() const { return domain_max_; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    double free_flow_time() const { return fft_; }
    double capacity() const { return capacity_; }
    double bpr_b() const { return b_; }
    double bpr_power() const { return power_; }
    bool is_zero() const;

    std::string describe() const;

private:
    CostFunction() = default;
    void check_admissible() const;

    CostKind kind_ = CostKind::Constant;
    std::vector<double> coeffs_;  // Polynomial: a0..aN
    double fft_ = 0.0, capacity_ = 1.0, b_ = 0.0, power_ = 1.0;
    double constant_ = 0.0;
    double domain_max_ = 1.0;
};

}  // namespace wardrop
