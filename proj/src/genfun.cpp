#include "colombeau/genfun.hpp"

#include "colombeau/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace colombeau {

namespace {

std::size_t mix(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const Certificate kEpsCertificate{std::numeric_limits<double>::denorm_min(), 1.0};

NodePtr make(NodeKind k, double v = 0.0, int ord = 0, ProfilePtr p = nullptr,
             std::optional<Certificate> cert = std::nullopt, std::vector<NodePtr> kids = {})
{
    return std::make_shared<const Node>(k, v, ord, std::move(p), cert, std::move(kids));
}

void check_eps(double eps)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        std::ostringstream os;
        os << "eps must lie in (0, 1), got " << eps;
        throw InvalidArgument(os.str());
    }
}

double pow_int(double b, int n)
{
    double result = 1.0;
    double base = b;
    unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
    while (e) {
        if (e & 1U)
            result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

[[noreturn]] void certificate_failure(double value, const Certificate& c)
{
    std::ostringstream os;
    os.precision(17);
    os << "certificate violation: base value " << value << " outside [" << c.lo << ", " << c.hi << "]";
    throw CertificateViolation(os.str());
}

double eval_node(const Node& n, double x, double eps);

// Base of a negative power, checked against its certificate.
double certified_base(const Node& pw, double x, double eps)
{
    const double b = eval_node(*pw.children[0], x, eps);
    if (pw.order < 0) {
        if (!pw.certificate || !pw.certificate->contains(b))
            certificate_failure(b, pw.certificate.value_or(Certificate{}));
    }
    return b;
}

double eval_node(const Node& n, double x, double eps)
{
    switch (n.kind) {
    case NodeKind::Constant:
        return n.value;
    case NodeKind::X:
        return x;
    case NodeKind::Eps:
        return eps;
    case NodeKind::Profile:
        return n.profile->deriv(n.order, eval_node(*n.children[0], x, eps));
    case NodeKind::Sum: {
        double acc = 0.0;
        for (const auto& c : n.children)
            acc += eval_node(*c, x, eps);
        return acc;
    }
    case NodeKind::Product: {
        // Negative powers divide rather than multiply by a reciprocal, so
        // c * b^-1 at b == c evaluates to exactly 1.
        double acc = 1.0;
        bool first = true;
        for (const auto& c : n.children) {
            if (c->kind == NodeKind::Power && c->order < 0) {
                const double b = certified_base(*c, x, eps);
                const double p = pow_int(b, -c->order);
                acc = first ? 1.0 / p : acc / p;
            } else {
                const double v = eval_node(*c, x, eps);
                acc = first ? v : acc * v;
            }
            first = false;
        }
        return acc;
    }
    case NodeKind::Power: {
        const double b = certified_base(n, x, eps);
        return n.order < 0 ? 1.0 / pow_int(b, -n.order) : pow_int(b, n.order);
    }
    case NodeKind::Negate:
        return -eval_node(*n.children[0], x, eps);
    case NodeKind::Sin:
        return std::sin(eval_node(*n.children[0], x, eps));
    case NodeKind::Cos:
        return std::cos(eval_node(*n.children[0], x, eps));
    case NodeKind::Exp:
        return std::exp(eval_node(*n.children[0], x, eps));
    }
    return 0.0;
}

GenFunction wrap(NodePtr p) { return GenFunction(std::move(p)); }

}  // namespace

Node::Node(NodeKind k, double v, int ord, ProfilePtr p, std::optional<Certificate> cert,
           std::vector<NodePtr> kids)
    : kind(k), value(v), order(ord), profile(std::move(p)), certificate(cert), children(std::move(kids))
{
    std::size_t h = std::hash<int>{}(static_cast<int>(kind));
    h = mix(h, std::bit_cast<std::uint64_t>(value));
    h = mix(h, std::hash<int>{}(order));
    if (profile)
        h = mix(h, std::hash<std::string>{}(profile->name()));
    for (const auto& c : children) {
        h = mix(h, c->hash);
        depends_on_x = depends_on_x || c->depends_on_x;
    }
    hash = h;
    if (kind == NodeKind::X)
        depends_on_x = true;
}

bool structurally_equal(const Node& a, const Node& b)
{
    if (&a == &b)
        return true;
    if (a.hash != b.hash || a.kind != b.kind || a.order != b.order || a.children.size() != b.children.size())
        return false;
    if (std::bit_cast<std::uint64_t>(a.value) != std::bit_cast<std::uint64_t>(b.value))
        return false;
    if ((a.profile == nullptr) != (b.profile == nullptr))
        return false;
    if (a.profile && a.profile->name() != b.profile->name())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i]))
            return false;
    return true;
}

GenFunction::GenFunction() : root_(make(NodeKind::Constant, 0.0)) {}

GenFunction::GenFunction(NodePtr root) : root_(std::move(root))
{
    if (!root_)
        throw InvalidArgument("GenFunction: null expression");
}

double GenFunction::operator()(double x, double eps) const { return evaluate(*this, x, eps); }

std::size_t GenFunction::size() const
{
    std::size_t count = 0;
    std::vector<const Node*> stack{root_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& c : n->children)
            stack.push_back(c.get());
    }
    return count;
}

GenFunction constant(double c) { return wrap(make(NodeKind::Constant, c)); }
GenFunction variable_x() { return wrap(make(NodeKind::X)); }
GenFunction epsilon() { return wrap(make(NodeKind::Eps)); }

GenFunction profile_node(ProfilePtr profile, int order, const GenFunction& arg)
{
    if (!profile)
        throw InvalidArgument("profile_node: null profile");
    if (order < 0)
        throw InvalidArgument("profile_node: negative derivative order");
    if (arg.is_constant())
        return constant(profile->deriv(order, arg.node().value));
    return wrap(make(NodeKind::Profile, 0.0, order, std::move(profile), std::nullopt, {arg.root()}));
}

GenFunction heaviside(ProfilePtr profile)
{
    return profile_node(std::move(profile), 0, mul(variable_x(), ipow(epsilon(), -1, kEpsCertificate)));
}

GenFunction heaviside(std::string_view profile_name) { return heaviside(find_profile(profile_name)); }

GenFunction dirac(ProfilePtr profile) { return differentiate(heaviside(std::move(profile)), 1); }

GenFunction dirac(std::string_view profile_name) { return dirac(find_profile(profile_name)); }

GenFunction add(const GenFunction& a, const GenFunction& b)
{
    std::vector<NodePtr> terms;
    double c = 0.0;
    bool has_constant = false;
    for (const GenFunction* g : {&a, &b}) {
        const Node& n = g->node();
        if (n.kind == NodeKind::Sum) {
            for (const auto& t : n.children) {
                if (t->kind == NodeKind::Constant) {
                    c += t->value;
                    has_constant = true;
                } else {
                    terms.push_back(t);
                }
            }
        } else if (n.kind == NodeKind::Constant) {
            c += n.value;
            has_constant = true;
        } else {
            terms.push_back(g->root());
        }
    }
    if (terms.empty())
        return constant(c);
    if (has_constant && c != 0.0)
        terms.insert(terms.begin(), make(NodeKind::Constant, c));
    if (terms.size() == 1)
        return wrap(terms.front());
    return wrap(make(NodeKind::Sum, 0.0, 0, nullptr, std::nullopt, std::move(terms)));
}

GenFunction neg(const GenFunction& a)
{
    const Node& n = a.node();
    if (n.kind == NodeKind::Constant)
        return constant(-n.value);
    if (n.kind == NodeKind::Negate)
        return wrap(n.children[0]);
    return wrap(make(NodeKind::Negate, 0.0, 0, nullptr, std::nullopt, {a.root()}));
}

GenFunction sub(const GenFunction& a, const GenFunction& b) { return add(a, neg(b)); }

namespace {

struct Factor {
    NodePtr base;
    int exponent;
    std::optional<Certificate> cert;
};

NodePtr power_node(const NodePtr& base, int exponent, std::optional<Certificate> cert)
{
    if (exponent == 1)
        return base;
    return make(NodeKind::Power, 0.0, exponent, nullptr, cert, {base});
}

}  // namespace

GenFunction mul(const GenFunction& a, const GenFunction& b)
{
    double c = 1.0;
    std::vector<Factor> factors;
    auto absorb = [&](const NodePtr& f) {
        if (f->kind == NodeKind::Constant) {
            c *= f->value;
            return;
        }
        Factor fac = f->kind == NodeKind::Power ? Factor{f->children[0], f->order, f->certificate}
                                                 : Factor{f, 1, std::nullopt};
        for (auto& existing : factors) {
            if (structurally_equal(*existing.base, *fac.base)) {
                existing.exponent += fac.exponent;
                if (!existing.cert)
                    existing.cert = fac.cert;
                return;
            }
        }
        factors.push_back(std::move(fac));
    };
    for (const GenFunction* g : {&a, &b}) {
        const Node& n = g->node();
        if (n.kind == NodeKind::Product) {
            for (const auto& f : n.children)
                absorb(f);
        } else {
            absorb(g->root());
        }
    }
    if (c == 0.0)
        return constant(0.0);

    std::vector<NodePtr> kids;
    if (c != 1.0)
        kids.push_back(make(NodeKind::Constant, c));
    for (const auto& f : factors) {
        if (f.exponent == 0)
            continue;  // b^-k * b^k with b certified non-zero
        kids.push_back(power_node(f.base, f.exponent, f.cert));
    }
    if (kids.empty())
        return constant(c);
    if (kids.size() == 1)
        return wrap(kids.front());
    return wrap(make(NodeKind::Product, 0.0, 0, nullptr, std::nullopt, std::move(kids)));
}

GenFunction scale(const GenFunction& a, double r) { return mul(constant(r), a); }

GenFunction ipow(const GenFunction& a, int n, std::optional<Certificate> cert)
{
    const Node& base = a.node();
    if (n == 0)
        return constant(1.0);
    if (n == 1)
        return a;

    if (n < 0) {
        if (!cert && base.kind == NodeKind::Power && base.certificate)
            cert = base.certificate;
        if (!cert)
            throw InvalidArgument("negative power needs a sign-definiteness certificate on its base");
        if (!cert->sign_definite() || !(cert->lo <= cert->hi))
            throw InvalidArgument("certificate interval must exclude zero");
        if (base.kind != NodeKind::Power) {
            if (auto enc = enclosure(a)) {
                const double tol = 1e-12 * std::max({1.0, std::abs(cert->lo), std::abs(cert->hi)});
                if (enc->lo < cert->lo - tol || enc->hi > cert->hi + tol) {
                    std::ostringstream os;
                    os.precision(17);
                    os << "declared certificate [" << cert->lo << ", " << cert->hi
                       << "] does not contain the base enclosure [" << enc->lo << ", " << enc->hi << "]";
                    throw InvalidArgument(os.str());
                }
            }
        }
    }

    if (base.kind == NodeKind::Constant) {
        if (n < 0 && base.value == 0.0)
            throw InvalidArgument("negative power of zero");
        return constant(n < 0 ? 1.0 / pow_int(base.value, -n) : pow_int(base.value, n));
    }
    if (base.kind == NodeKind::Power) {
        auto inner_cert = base.certificate ? base.certificate : cert;
        const int e = base.order * n;
        if (e < 0 && !inner_cert)
            throw InvalidArgument("negative power needs a sign-definiteness certificate on its base");
        return wrap(power_node(base.children[0], e, inner_cert));
    }
    return wrap(make(NodeKind::Power, 0.0, n, nullptr, n < 0 ? cert : std::nullopt, {a.root()}));
}

GenFunction recip(const GenFunction& a, Certificate cert) { return ipow(a, -1, cert); }

GenFunction sin(const GenFunction& a)
{
    if (a.is_constant())
        return constant(std::sin(a.node().value));
    return wrap(make(NodeKind::Sin, 0.0, 0, nullptr, std::nullopt, {a.root()}));
}

GenFunction cos(const GenFunction& a)
{
    if (a.is_constant())
        return constant(std::cos(a.node().value));
    return wrap(make(NodeKind::Cos, 0.0, 0, nullptr, std::nullopt, {a.root()}));
}

GenFunction exp(const GenFunction& a)
{
    if (a.is_constant())
        return constant(std::exp(a.node().value));
    return wrap(make(NodeKind::Exp, 0.0, 0, nullptr, std::nullopt, {a.root()}));
}

namespace {

class Differentiator {
public:
    GenFunction d(const NodePtr& p)
    {
        if (!p->depends_on_x)
            return constant(0.0);
        if (auto it = memo_.find(p.get()); it != memo_.end())
            return it->second;
        GenFunction r = compute(p);
        memo_.emplace(p.get(), r);
        return r;
    }

private:
    GenFunction compute(const NodePtr& p)
    {
        const Node& n = *p;
        switch (n.kind) {
        case NodeKind::X:
            return constant(1.0);
        case NodeKind::Profile: {
            GenFunction arg(n.children[0]);
            return mul(profile_node(n.profile, n.order + 1, arg), d(n.children[0]));
        }
        case NodeKind::Sum: {
            GenFunction acc = constant(0.0);
            for (const auto& c : n.children)
                acc = add(acc, d(c));
            return acc;
        }
        case NodeKind::Product: {
            GenFunction acc = constant(0.0);
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (!n.children[i]->depends_on_x)
                    continue;
                GenFunction term = constant(1.0);
                for (std::size_t j = 0; j < n.children.size(); ++j)
                    term = mul(term, j == i ? d(n.children[j]) : GenFunction(n.children[j]));
                acc = add(acc, term);
            }
            return acc;
        }
        case NodeKind::Power: {
            GenFunction base(n.children[0]);
            return mul(mul(constant(static_cast<double>(n.order)), ipow(base, n.order - 1, n.certificate)),
                       d(n.children[0]));
        }
        case NodeKind::Negate:
            return neg(d(n.children[0]));
        case NodeKind::Sin: {
            GenFunction a(n.children[0]);
            return mul(cos(a), d(n.children[0]));
        }
        case NodeKind::Cos: {
            GenFunction a(n.children[0]);
            return neg(mul(sin(a), d(n.children[0])));
        }
        case NodeKind::Exp:
            return mul(GenFunction(p), d(n.children[0]));
        case NodeKind::Constant:
        case NodeKind::Eps:
            break;
        }
        return constant(0.0);
    }

    std::unordered_map<const Node*, GenFunction> memo_;
};

}  // namespace

GenFunction differentiate(const GenFunction& g, int n)
{
    if (n < 0)
        throw InvalidArgument("derivative order must be >= 0");
    GenFunction out = g;
    for (int k = 0; k < n; ++k) {
        Differentiator diff;
        out = diff.d(out.root());
    }
    return out;
}

double evaluate(const GenFunction& g, double x, double eps)
{
    check_eps(eps);
    return eval_node(g.node(), x, eps);
}

namespace {

std::optional<Interval> enclose(const Node& n)
{
    auto finite = [](Interval iv) -> std::optional<Interval> {
        if (std::isfinite(iv.lo) && std::isfinite(iv.hi))
            return iv;
        return std::nullopt;
    };
    switch (n.kind) {
    case NodeKind::Constant:
        return Interval{n.value, n.value};
    case NodeKind::X:
        return std::nullopt;
    case NodeKind::Eps:
        return Interval{kEpsCertificate.lo, kEpsCertificate.hi};
    case NodeKind::Profile:
        if (n.order == 0)
            return Interval{n.profile->range_lo(), n.profile->range_hi()};
        return std::nullopt;
    case NodeKind::Sum: {
        Interval acc{0.0, 0.0};
        for (const auto& c : n.children) {
            auto e = enclose(*c);
            if (!e)
                return std::nullopt;
            acc = {acc.lo + e->lo, acc.hi + e->hi};
        }
        return finite(acc);
    }
    case NodeKind::Product: {
        Interval acc{1.0, 1.0};
        for (const auto& c : n.children) {
            auto e = enclose(*c);
            if (!e)
                return std::nullopt;
            const double p[] = {acc.lo * e->lo, acc.lo * e->hi, acc.hi * e->lo, acc.hi * e->hi};
            acc = {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
            if (!finite(acc))
                return std::nullopt;
        }
        return acc;
    }
    case NodeKind::Power: {
        std::optional<Interval> b;
        if (n.order < 0 && n.certificate)
            b = Interval{n.certificate->lo, n.certificate->hi};
        else
            b = enclose(*n.children[0]);
        if (!b)
            return std::nullopt;
        const int m = n.order < 0 ? -n.order : n.order;
        Interval p;
        if (m % 2 == 1) {
            p = {pow_int(b->lo, m), pow_int(b->hi, m)};
        } else if (b->lo >= 0.0) {
            p = {pow_int(b->lo, m), pow_int(b->hi, m)};
        } else if (b->hi <= 0.0) {
            p = {pow_int(b->hi, m), pow_int(b->lo, m)};
        } else {
            p = {0.0, pow_int(std::max(-b->lo, b->hi), m)};
        }
        if (n.order < 0) {
            if (p.lo <= 0.0 && p.hi >= 0.0)
                return std::nullopt;
            p = {1.0 / p.hi, 1.0 / p.lo};
        }
        return finite(p);
    }
    case NodeKind::Negate: {
        auto e = enclose(*n.children[0]);
        if (!e)
            return std::nullopt;
        return Interval{-e->hi, -e->lo};
    }
    case NodeKind::Sin:
    case NodeKind::Cos:
        return Interval{-1.0, 1.0};
    case NodeKind::Exp: {
        auto e = enclose(*n.children[0]);
        if (!e)
            return std::nullopt;
        return finite(Interval{std::exp(e->lo), std::exp(e->hi)});
    }
    }
    return std::nullopt;
}

void collect_profiles(const NodePtr& p, std::vector<NodePtr>& out)
{
    if (p->kind == NodeKind::Profile) {
        for (const auto& q : out)
            if (structurally_equal(*q, *p))
                return;
        out.push_back(p);
    }
    for (const auto& c : p->children)
        collect_profiles(c, out);
}

std::optional<std::pair<double, double>> affine(const Node& n, double eps)
{
    if (!n.depends_on_x)
        return std::pair{0.0, eval_node(n, 0.0, eps)};
    switch (n.kind) {
    case NodeKind::X:
        return std::pair{1.0, 0.0};
    case NodeKind::Sum: {
        std::pair<double, double> acc{0.0, 0.0};
        for (const auto& c : n.children) {
            auto a = affine(*c, eps);
            if (!a)
                return std::nullopt;
            acc.first += a->first;
            acc.second += a->second;
        }
        return acc;
    }
    case NodeKind::Product: {
        std::optional<std::pair<double, double>> lin;
        double coef = 1.0;
        for (const auto& c : n.children) {
            if (c->depends_on_x) {
                if (lin)
                    return std::nullopt;
                lin = affine(*c, eps);
                if (!lin)
                    return std::nullopt;
            } else if (c->kind == NodeKind::Power && c->order < 0) {
                coef /= pow_int(certified_base(*c, 0.0, eps), -c->order);
            } else {
                coef *= eval_node(*c, 0.0, eps);
            }
        }
        return std::pair{coef * lin->first, coef * lin->second};
    }
    case NodeKind::Negate: {
        auto a = affine(*n.children[0], eps);
        if (!a)
            return std::nullopt;
        return std::pair{-a->first, -a->second};
    }
    default:
        return std::nullopt;
    }
}

std::optional<double> tail(const Node& n, double eps, int side)
{
    if (!n.depends_on_x)
        return eval_node(n, 0.0, eps);
    switch (n.kind) {
    case NodeKind::X:
        return std::nullopt;
    case NodeKind::Profile: {
        auto a = affine(*n.children[0], eps);
        if (!a)
            return std::nullopt;
        if (a->first == 0.0)
            return n.profile->deriv(n.order, a->second);
        if (n.order > 0)
            return 0.0;
        const double far = (n.profile->support_radius() + 1.0) * (a->first > 0.0 ? side : -side);
        return n.profile->deriv(0, far);
    }
    case NodeKind::Sum: {
        double acc = 0.0;
        for (const auto& c : n.children) {
            auto v = tail(*c, eps, side);
            if (!v)
                return std::nullopt;
            acc += *v;
        }
        return acc;
    }
    case NodeKind::Product: {
        std::vector<std::optional<double>> vals;
        bool all_known = true;
        for (const auto& c : n.children) {
            // Powers are handled via their base below.
            auto v = tail(*c, eps, side);
            if (v && *v == 0.0 && !(c->kind == NodeKind::Power && c->order < 0))
                return 0.0;
            all_known = all_known && v.has_value();
            vals.push_back(v);
        }
        if (!all_known)
            return std::nullopt;
        double acc = 1.0;
        for (const auto& v : vals)
            acc *= *v;
        return acc;
    }
    case NodeKind::Power: {
        auto b = tail(*n.children[0], eps, side);
        if (!b)
            return std::nullopt;
        if (n.order < 0) {
            if (*b == 0.0)
                return std::nullopt;
            return 1.0 / pow_int(*b, -n.order);
        }
        return pow_int(*b, n.order);
    }
    case NodeKind::Negate: {
        auto v = tail(*n.children[0], eps, side);
        if (!v)
            return std::nullopt;
        return -*v;
    }
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp: {
        auto v = tail(*n.children[0], eps, side);
        if (!v)
            return std::nullopt;
        if (n.kind == NodeKind::Sin)
            return std::sin(*v);
        if (n.kind == NodeKind::Cos)
            return std::cos(*v);
        return std::exp(*v);
    }
    default:
        return std::nullopt;
    }
}

}  // namespace

std::optional<Interval> enclosure(const GenFunction& g) { return enclose(g.node()); }

std::vector<NodePtr> profile_nodes(const GenFunction& g)
{
    std::vector<NodePtr> out;
    collect_profiles(g.root(), out);
    return out;
}

std::optional<std::pair<double, double>> affine_in_x(const GenFunction& g, double eps)
{
    check_eps(eps);
    return affine(g.node(), eps);
}

std::vector<std::pair<double, double>> transition_zones(const GenFunction& g, double eps)
{
    check_eps(eps);
    std::vector<std::pair<double, double>> zones;
    for (const auto& p : profile_nodes(g)) {
        auto a = affine(*p->children[0], eps);
        if (!a || a->first == 0.0)
            continue;
        const double r = p->profile->support_radius();
        double lo = (-r - a->second) / a->first;
        double hi = (r - a->second) / a->first;
        if (lo > hi)
            std::swap(lo, hi);
        const std::pair zone{lo, hi};
        if (std::find(zones.begin(), zones.end(), zone) == zones.end())
            zones.push_back(zone);
    }
    std::sort(zones.begin(), zones.end());
    return zones;
}

std::optional<double> tail_value(const GenFunction& g, double eps, int side)
{
    check_eps(eps);
    if (side == 0)
        throw InvalidArgument("tail_value: side must be negative or positive");
    return tail(g.node(), eps, side < 0 ? -1 : 1);
}

GenNumber::GenNumber() : GenNumber(GenNumber::constant(0.0)) {}

GenNumber::GenNumber(Fn fn, std::string origin) : fn_(std::move(fn)), origin_(std::move(origin))
{
    if (!fn_)
        throw InvalidArgument("GenNumber: empty function");
}

GenNumber GenNumber::constant(double c)
{
    return GenNumber([c](double) { return GenSample{c, 0.0}; }, "constant");
}

GenNumber GenNumber::from_function(std::function<double(double)> f, std::string origin)
{
    return GenNumber([f = std::move(f)](double eps) { return GenSample{f(eps), 0.0}; }, std::move(origin));
}

GenSample GenNumber::sample(double eps) const
{
    check_eps(eps);
    return fn_(eps);
}

}  // namespace colombeau
