#include "wardrop/cost_function.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wardrop {

namespace {
constexpr int kAdmissibilityGridPoints = 129;
constexpr double kMonotoneSlack = 1e-9;
}  // namespace

CostFunction CostFunction::polynomial(std::vector<double> coefficients, double domain_max) {
    if (coefficients.empty()) coefficients.push_back(0.0);
    if (coefficients.size() > 5)
        throw std::invalid_argument("polynomial cost supports degree <= 4");
    CostFunction c;
    c.kind_ = CostKind::Polynomial;
    c.coeffs_ = std::move(coefficients);
    c.domain_max_ = domain_max;
    c.check_admissible();
    return c;
}

CostFunction CostFunction::bpr(double free_flow_time, double capacity, double b, double power,
                               double domain_max) {
    if (capacity <= 0.0) throw std::invalid_argument("bpr capacity must be positive");
    if (power < 1.0) throw std::invalid_argument("bpr power must be >= 1");
    CostFunction c;
    c.kind_ = CostKind::Bpr;
    c.fft_ = free_flow_time;
    c.capacity_ = capacity;
    c.b_ = b;
    c.power_ = power;
    c.domain_max_ = domain_max;
    c.check_admissible();
    return c;
}

CostFunction CostFunction::constant(double value) {
    if (value < 0.0) throw std::invalid_argument("constant cost must be non-negative");
    CostFunction c;
    c.kind_ = CostKind::Constant;
    c.constant_ = value;
    c.domain_max_ = std::numeric_limits<double>::max();
    return c;
}

double CostFunction::value(double x) const {
    switch (kind_) {
        case CostKind::Constant:
            return constant_;
        case CostKind::Polynomial: {
            double v = 0.0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
            return v;
        }
        case CostKind::Bpr:
            return fft_ * (1.0 + b_ * std::pow(x / capacity_, power_));
    }
    return 0.0;
}

double CostFunction::integral(double x) const {
    switch (kind_) {
        case CostKind::Constant:
            return constant_ * x;
        case CostKind::Polynomial: {
            // sum a_i x^{i+1}/(i+1), Horner on the antiderivative
            double v = 0.0;
            for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
                v = v * x + coeffs_[static_cast<size_t>(i)] / (i + 1);
            return v * x;
        }
        case CostKind::Bpr:
            return fft_ * (x + b_ * x * std::pow(x / capacity_, power_) / (power_ + 1.0));
    }
    return 0.0;
}

double CostFunction::derivative(double x) const {
    switch (kind_) {
        case CostKind::Constant:
            return 0.0;
        case CostKind::Polynomial: {
            double v = 0.0;
            for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 1; --i)
                v = v * x + i * coeffs_[static_cast<size_t>(i)];
            return v;
        }
        case CostKind::Bpr:
            if (power_ == 1.0) return fft_ * b_ / capacity_;
            return fft_ * b_ * power_ * std::pow(x / capacity_, power_ - 1.0) / capacity_;
    }
    return 0.0;
}

CostFunction CostFunction::marginal() const {
    switch (kind_) {
        case CostKind::Constant:
            return *this;
        case CostKind::Polynomial: {
            std::vector<double> m(coeffs_.size());
            for (size_t i = 0; i < coeffs_.size(); ++i) m[i] = (i + 1.0) * coeffs_[i];
            return polynomial(std::move(m), domain_max_);
        }
        case CostKind::Bpr:
            return bpr(fft_, capacity_, b_ * (power_ + 1.0), power_, domain_max_);
    }
    return constant(0.0);
}

bool CostFunction::is_zero() const {
    if (kind_ == CostKind::Constant) return constant_ == 0.0;
    if (kind_ == CostKind::Polynomial) {
        for (double a : coeffs_)
            if (a != 0.0) return false;
        return true;
    }
    return false;
}

void CostFunction::check_admissible() const {
    if (!(domain_max_ > 0.0)) throw std::invalid_argument("cost domain_max must be positive");
    double prev = value(0.0);
    if (prev < 0.0)
        throw std::invalid_argument("cost function negative at zero flow: " + describe());
    for (int i = 1; i < kAdmissibilityGridPoints; ++i) {
        const double x = domain_max_ * i / (kAdmissibilityGridPoints - 1);
        const double v = value(x);
        if (v < 0.0)
            throw std::invalid_argument("cost function negative on domain: " + describe());
        if (v < prev - kMonotoneSlack)
            throw std::invalid_argument("cost function decreasing on domain: " + describe());
        prev = v;
    }
}

std::string CostFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case CostKind::Constant:
            os << "constant(" << constant_ << ")";
            break;
        case CostKind::Polynomial: {
            os << "poly(";
            for (size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
            os << ")";
            break;
        }
        case CostKind::Bpr:
            os << "bpr(fft=" << fft_ << ",cap=" << capacity_ << ",b=" << b_ << ",p=" << power_
               << ")";
            break;
    }
    return os.str();
}

}  // namespace wardrop
