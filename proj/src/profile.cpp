#include "colombeau/profile.hpp"

#include "colombeau/error.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace colombeau {

namespace bump {
namespace {

// psi^(n)(t) = P_n(t) (1 - t^2)^(-2n) psi(t), with
// P_{n+1} = (1 - t^2)^2 P_n' + (4 n t (1 - t^2) - 2 t) P_n,  P_0 = 1.
using Poly = std::vector<double>;

Poly next_poly(const Poly& p, int n)
{
    Poly out(p.size() + 3, 0.0);
    // (1 - 2t^2 + t^4) * P'
    for (std::size_t k = 1; k < p.size(); ++k) {
        const double dk = static_cast<double>(k) * p[k];
        out[k - 1] += dk;
        out[k + 1] -= 2.0 * dk;
        out[k + 3] += dk;
    }
    // (4n - 2) t P - 4n t^3 P
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k + 1] += (4.0 * n - 2.0) * p[k];
        out[k + 3] -= 4.0 * n * p[k];
    }
    while (out.size() > 1 && out.back() == 0.0)
        out.pop_back();
    return out;
}

constexpr int kCachedOrders = 24;

const std::vector<Poly>& poly_table()
{
    static const std::vector<Poly> table = [] {
        std::vector<Poly> t{Poly{1.0}};
        for (int n = 0; n + 1 < kCachedOrders; ++n)
            t.push_back(next_poly(t.back(), n));
        return t;
    }();
    return table;
}

double horner(const Poly& p, double t)
{
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

}  // namespace

double psi(double t)
{
    if (!(std::abs(t) < 1.0))
        return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
}

double psi_deriv(int n, double t)
{
    if (n < 0)
        throw InvalidArgument("psi_deriv: negative derivative order");
    if (!(std::abs(t) < 1.0))
        return 0.0;
    const double s = 1.0 - t * t;
    const double expo = -1.0 / s - 2.0 * n * std::log(s);
    if (n < kCachedOrders)
        return horner(poly_table()[static_cast<std::size_t>(n)], t) * std::exp(expo);
    Poly p = poly_table().back();
    for (int k = kCachedOrders - 1; k < n; ++k)
        p = next_poly(p, k);
    return horner(p, t) * std::exp(expo);
}

}  // namespace bump

namespace {

constexpr int kPanels = 128;

}  // namespace

BumpIntegralProfile::BumpIntegralProfile(std::string name, double skew)
    : name_(std::move(name)), skew_(skew)
{
    if (!(std::abs(skew) < 1.0))
        throw InvalidArgument("bump profile skew must lie in (-1, 1)");

    using boost::math::quadrature::gauss_kronrod;
    nodes_.resize(kPanels + 1);
    for (int j = 0; j <= kPanels; ++j)
        nodes_[static_cast<std::size_t>(j)] = -1.0 + 2.0 * j / kPanels;
    nodes_.back() = 1.0;

    std::vector<double> mass(kPanels);
    auto w = [this](double t) { return weight(t); };
    const bool symmetric = skew_ == 0.0;
    for (int j = 0; j < kPanels; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        if (symmetric && j >= kPanels / 2)
            mass[ju] = mass[static_cast<std::size_t>(kPanels - 1 - j)];
        else
            mass[ju] = gauss_kronrod<double, 31>::integrate(w, nodes_[ju], nodes_[ju + 1], 3, 1e-14);
    }
    left_mass_.assign(kPanels + 1, 0.0);
    right_mass_.assign(kPanels + 1, 0.0);
    for (int j = 0; j < kPanels; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        left_mass_[ju + 1] = left_mass_[ju] + mass[ju];
    }
    for (int j = kPanels - 1; j >= 0; --j) {
        const auto ju = static_cast<std::size_t>(j);
        right_mass_[ju] = right_mass_[ju + 1] + mass[ju];
    }
    // Symmetric case: K(0) = 1/2 exactly.
    norm_ = symmetric ? 2.0 * left_mass_[kPanels / 2] : left_mass_.back();
}

double BumpIntegralProfile::weight(double t) const
{
    return (1.0 + skew_ * t) * bump::psi(t);
}

double BumpIntegralProfile::cumulative_left(double y) const
{
    const auto j = static_cast<std::size_t>(
        std::clamp(static_cast<int>(std::floor((y + 1.0) * kPanels / 2.0)), 0, kPanels - 1));
    auto w = [this](double t) { return weight(t); };
    const double a = nodes_[j];
    const double partial = y > a ? boost::math::quadrature::gauss<double, 20>::integrate(w, a, y) : 0.0;
    return left_mass_[j] + partial;
}

double BumpIntegralProfile::cumulative_right(double y) const
{
    const auto j = static_cast<std::size_t>(
        std::clamp(static_cast<int>(std::floor((y + 1.0) * kPanels / 2.0)), 0, kPanels - 1));
    auto w = [this](double t) { return weight(t); };
    const double b = nodes_[j + 1];
    const double partial = b > y ? boost::math::quadrature::gauss<double, 20>::integrate(w, y, b) : 0.0;
    return right_mass_[j + 1] + partial;
}

double BumpIntegralProfile::deriv(int n, double y) const
{
    if (n < 0)
        throw InvalidArgument("profile derivative order must be >= 0");
    if (n == 0) {
        if (y <= -1.0)
            return 0.0;
        if (y >= 1.0)
            return 1.0;
        if (y <= 0.0)
            return cumulative_left(y) / norm_;
        return 1.0 - cumulative_right(y) / norm_;
    }
    if (!(std::abs(y) < 1.0))
        return 0.0;
    // (1 + a t) psi, differentiated n - 1 times.
    const int k = n - 1;
    double v = (1.0 + skew_ * y) * bump::psi_deriv(k, y);
    if (k > 0 && skew_ != 0.0)
        v += k * skew_ * bump::psi_deriv(k - 1, y);
    return v / norm_;
}

PowerProfile::PowerProfile(ProfilePtr base, int power, std::string name)
    : base_(std::move(base)), power_(power), name_(std::move(name))
{
    if (!base_)
        throw InvalidArgument("power profile needs a base profile");
    if (power_ < 1)
        throw InvalidArgument("power profile exponent must be >= 1");
    if (name_.empty())
        name_ = base_->name() + "^" + std::to_string(power_);
}

double PowerProfile::deriv(int n, double y) const
{
    if (n < 0)
        throw InvalidArgument("profile derivative order must be >= 0");
    const auto count = static_cast<std::size_t>(n) + 1;
    std::vector<double> base_d(count);
    for (std::size_t k = 0; k < count; ++k)
        base_d[k] = base_->deriv(static_cast<int>(k), y);

    // Iterated Leibniz: (K * F)^(k) = sum_j C(k, j) K^(j) F^(k-j).
    std::vector<double> acc = base_d;
    std::vector<double> next(count);
    for (int p = 1; p < power_; ++p) {
        for (std::size_t k = 0; k < count; ++k) {
            double s = 0.0;
            double binom = 1.0;
            for (std::size_t j = 0; j <= k; ++j) {
                s += binom * base_d[j] * acc[k - j];
                binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
            }
            next[k] = s;
        }
        std::swap(acc, next);
    }
    return acc[static_cast<std::size_t>(n)];
}

const std::vector<ProfilePtr>& builtin_profiles()
{
    static const std::vector<ProfilePtr> profiles = [] {
        auto symmetric = std::make_shared<const BumpIntegralProfile>("bump");
        std::vector<ProfilePtr> out;
        out.push_back(symmetric);
        out.push_back(std::make_shared<const PowerProfile>(symmetric, 2, "bump-squared"));
        out.push_back(std::make_shared<const BumpIntegralProfile>("bump-skewed", 0.5));
        return out;
    }();
    return profiles;
}

ProfilePtr find_profile(std::string_view name)
{
    for (const auto& p : builtin_profiles())
        if (p->name() == name)
            return p;

    const auto caret = name.rfind('^');
    if (caret != std::string_view::npos) {
        const auto exponent = name.substr(caret + 1);
        int power = 0;
        const auto [ptr, ec] = std::from_chars(exponent.data(), exponent.data() + exponent.size(), power);
        if (ec == std::errc{} && ptr == exponent.data() + exponent.size() && power >= 1) {
            auto base = find_profile(name.substr(0, caret));
            if (power == 1)
                return base;
            return std::make_shared<const PowerProfile>(std::move(base), power);
        }
    }
    throw InvalidArgument("unknown profile '" + std::string(name) + "'");
}

}  // namespace colombeau
