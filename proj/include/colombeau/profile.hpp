#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace colombeau {

/// Smooth transition kernel K: 0 left of -support_radius, 1 right of
/// +support_radius, C-infinity everywhere. Each kernel selects one Heaviside
/// generalized function H_eps(x) = K(x / eps).
///
/// Implementations are immutable after construction and safe to evaluate from
/// several threads.
class Profile {
public:
    virtual ~Profile() = default;

    virtual const std::string& name() const = 0;

    /// n-th derivative K^(n)(y), n >= 0.
    virtual double deriv(int n, double y) const = 0;

    double eval(double y) const { return deriv(0, y); }

    virtual double support_radius() const { return 1.0; }

    /// Enclosure of K over the whole line.
    virtual double range_lo() const { return 0.0; }
    virtual double range_hi() const { return 1.0; }

    virtual bool monotone() const { return true; }
};

using ProfilePtr = std::shared_ptr<const Profile>;

/// K(y) = int_{-1}^{y} psi / int_{-1}^{1} psi with
/// psi(t) = (1 + skew * t) * exp(-1 / (1 - t^2)) on (-1, 1).
/// skew = 0 is the symmetric bump integral; |skew| < 1 keeps psi positive.
class BumpIntegralProfile final : public Profile {
public:
    BumpIntegralProfile(std::string name, double skew = 0.0);

    const std::string& name() const override { return name_; }
    double deriv(int n, double y) const override;

    double skew() const noexcept { return skew_; }
    double normalization() const noexcept { return norm_; }

private:
    double weight(double t) const;
    double cumulative_left(double y) const;
    double cumulative_right(double y) const;

    std::string name_;
    double skew_;
    double norm_ = 1.0;
    std::vector<double> nodes_;       // panel boundaries on [-1, 1]
    std::vector<double> left_mass_;   // int_{-1}^{nodes_[j]} psi
    std::vector<double> right_mass_;  // int_{nodes_[j]}^{1} psi
};

/// K_base^power, itself a transition kernel. power = 2 on the bump gives the
/// builtin "bump-squared" profile (H^2 as a Heaviside generalized function).
class PowerProfile final : public Profile {
public:
    PowerProfile(ProfilePtr base, int power, std::string name = {});

    const std::string& name() const override { return name_; }
    double deriv(int n, double y) const override;
    double support_radius() const override { return base_->support_radius(); }

    const ProfilePtr& base() const noexcept { return base_; }
    int power() const noexcept { return power_; }

private:
    ProfilePtr base_;
    int power_;
    std::string name_;
};

/// The three builtin kernels, in order: "bump", "bump-squared", "bump-skewed".
const std::vector<ProfilePtr>& builtin_profiles();

/// Builtin name, or "<builtin>^<n>" for an integer power of a builtin.
/// Throws InvalidArgument for unknown names.
ProfilePtr find_profile(std::string_view name);

/// The symmetric bump exp(-1/(1-t^2)) on (-1, 1) and its derivatives, exact
/// to rounding. Shared by the bump profiles and the test functions.
namespace bump {

double psi(double t);
double psi_deriv(int n, double t);

}  // namespace bump

}  // namespace colombeau
