#pragma once

#include "colombeau/profile.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace colombeau {

/// Closed interval that a base is declared to stay inside. Must exclude 0.
struct Certificate {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const noexcept { return v >= lo && v <= hi; }
    bool sign_definite() const noexcept { return lo > 0.0 || hi < 0.0; }
};

enum class NodeKind {
    Constant,
    X,        // spatial variable
    Eps,      // regularization parameter
    Profile,  // K^(order)(arg)
    Sum,
    Product,
    Power,    // base^exponent, negative exponents need a certificate
    Negate,
    Sin,
    Cos,
    Exp,
};

class Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable expression node. Build through the GenFunction factories, which
/// keep trees in a lightly canonical form (flattened sums and products,
/// folded constants, merged powers of identical bases).
class Node {
public:
    NodeKind kind;
    double value = 0.0;     // Constant
    int order = 0;          // Profile: derivative order; Power: exponent
    ProfilePtr profile;     // Profile
    std::optional<Certificate> certificate;  // Power
    std::vector<NodePtr> children;
    std::size_t hash = 0;
    bool depends_on_x = false;

    Node(NodeKind k, double v, int ord, ProfilePtr p, std::optional<Certificate> cert,
         std::vector<NodePtr> kids);
};

bool structurally_equal(const Node& a, const Node& b);

/// One representative family (u_eps) of a generalized function: an evaluable
/// expression tree in (x, eps). Value type; copies share the immutable tree.
class GenFunction {
public:
    GenFunction();  // the constant 0
    explicit GenFunction(NodePtr root);

    const NodePtr& root() const noexcept { return root_; }
    const Node& node() const noexcept { return *root_; }
    NodeKind kind() const noexcept { return root_->kind; }

    bool is_constant() const noexcept { return root_->kind == NodeKind::Constant; }
    bool is_zero() const noexcept { return is_constant() && root_->value == 0.0; }

    /// Throws InvalidArgument for eps outside (0, 1) and CertificateViolation
    /// when a certified base leaves its interval.
    double operator()(double x, double eps) const;

    std::size_t size() const;  // node count, shared subtrees counted once per use

private:
    NodePtr root_;
};

// Leaves.
GenFunction constant(double c);
GenFunction variable_x();
GenFunction epsilon();

/// K^(order)(arg). Callers normally want heaviside()/dirac().
GenFunction profile_node(ProfilePtr profile, int order, const GenFunction& arg);

/// H_eps(x) = K(x / eps).
GenFunction heaviside(ProfilePtr profile);
GenFunction heaviside(std::string_view profile_name);

/// d/dx heaviside(profile) = K'(x / eps) / eps.
GenFunction dirac(ProfilePtr profile);
GenFunction dirac(std::string_view profile_name);

GenFunction add(const GenFunction& a, const GenFunction& b);
GenFunction sub(const GenFunction& a, const GenFunction& b);
GenFunction mul(const GenFunction& a, const GenFunction& b);
GenFunction neg(const GenFunction& a);
GenFunction scale(const GenFunction& a, double r);

/// a^n. n < 0 requires a certificate; the certificate is checked against an
/// interval enclosure of `a` when one can be computed.
GenFunction ipow(const GenFunction& a, int n, std::optional<Certificate> cert = std::nullopt);
GenFunction recip(const GenFunction& a, Certificate cert);

GenFunction sin(const GenFunction& a);
GenFunction cos(const GenFunction& a);
GenFunction exp(const GenFunction& a);

inline GenFunction operator+(const GenFunction& a, const GenFunction& b) { return add(a, b); }
inline GenFunction operator-(const GenFunction& a, const GenFunction& b) { return sub(a, b); }
inline GenFunction operator*(const GenFunction& a, const GenFunction& b) { return mul(a, b); }
inline GenFunction operator-(const GenFunction& a) { return neg(a); }
inline GenFunction operator*(double r, const GenFunction& a) { return scale(a, r); }
inline GenFunction operator*(const GenFunction& a, double r) { return scale(a, r); }
inline GenFunction operator+(const GenFunction& a, double c) { return add(a, constant(c)); }
inline GenFunction operator-(const GenFunction& a, double c) { return add(a, constant(-c)); }

/// Exact symbolic derivative of order n >= 0 with respect to x.
GenFunction differentiate(const GenFunction& g, int n = 1);

/// Deterministic tree evaluation; eps must lie in (0, 1).
double evaluate(const GenFunction& g, double x, double eps);

/// Interval enclosure over all x and eps in (0, 1), if the tree is bounded
/// in a way interval arithmetic can see.
struct Interval {
    double lo;
    double hi;
};
std::optional<Interval> enclosure(const GenFunction& g);

/// Distinct profile nodes of the tree (each with its argument), in first-seen order.
std::vector<NodePtr> profile_nodes(const GenFunction& g);

/// If `g` is affine in x at this eps, returns (slope, intercept).
std::optional<std::pair<double, double>> affine_in_x(const GenFunction& g, double eps);

/// Transition zones {x : |arg| <= support_radius} of all profile nodes with
/// affine arguments, sorted by left end.
std::vector<std::pair<double, double>> transition_zones(const GenFunction& g, double eps);

/// Value of g on the far left (side < 0) or far right (side > 0), when g is
/// provably constant there: every x-dependence enters through profile nodes
/// with affine arguments, or is multiplied by a factor that vanishes there.
std::optional<double> tail_value(const GenFunction& g, double eps, int side);

/// A generalized number: a deterministic map eps -> real.
struct GenSample {
    double value = 0.0;
    double error = 0.0;      // quadrature error estimate, 0 for exact evaluations
    double magnitude = 0.0;  // int |integrand| for quadratures, 0 otherwise
};

class GenNumber {
public:
    using Fn = std::function<GenSample(double)>;

    GenNumber();  // constant 0
    GenNumber(Fn fn, std::string origin);

    static GenNumber constant(double c);
    /// eps -> f(eps) with zero error estimate.
    static GenNumber from_function(std::function<double(double)> f, std::string origin);

    GenSample sample(double eps) const;
    double operator()(double eps) const { return sample(eps).value; }

    const std::string& origin() const noexcept { return origin_; }

private:
    Fn fn_;
    std::string origin_;
};

}  // namespace colombeau
