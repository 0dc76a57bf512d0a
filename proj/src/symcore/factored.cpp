#include "eulerdisc/symcore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eulerdisc::symcore {

void FactoredPolynomial::multiply(const MultiPoly& f, unsigned e)
{
    if (f.is_zero())
        throw std::invalid_argument("FactoredPolynomial: zero factor");
    if (e == 0 || f.is_constant())
        return;
    if (!vars_)
        vars_ = f.vars();
    MultiPoly c = canonical_poly(f);
    auto it = std::lower_bound(factors_.begin(), factors_.end(), c,
                               [](const Factor& a, const MultiPoly& b) { return factor_order_less(a.poly, b); });
    if (it != factors_.end() && it->poly == c) {
        it->exponent += e;
        return;
    }
    factors_.insert(it, Factor{std::move(c), e});
}

unsigned FactoredPolynomial::total_degree() const
{
    unsigned d = 0;
    for (const auto& f : factors_)
        d += f.exponent * f.poly.total_degree();
    return d;
}

std::optional<unsigned> FactoredPolynomial::exponent_of(const MultiPoly& f) const
{
    if (f.is_zero() || f.is_constant())
        return std::nullopt;
    const MultiPoly c = canonical_poly(f);
    for (const auto& x : factors_)
        if (x.poly == c)
            return x.exponent;
    return std::nullopt;
}

MultiPoly FactoredPolynomial::expand() const
{
    MultiPoly p = MultiPoly::constant(vars_, 1);
    for (const auto& f : factors_)
        p *= f.poly.pow(f.exponent);
    return p;
}

FactoredPolynomial FactoredPolynomial::reduced() const
{
    FactoredPolynomial r = *this;
    for (auto& f : r.factors_)
        f.exponent = 1;
    return r;
}

std::string FactoredPolynomial::to_string() const
{
    if (factors_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (!first)
            os << " * ";
        first = false;
        const bool bare = f.poly.size() == 1;
        if (bare)
            os << f.poly.to_string();
        else
            os << '(' << f.poly.to_string() << ')';
        if (f.exponent > 1)
            os << '^' << f.exponent;
    }
    return os.str();
}

bool operator==(const FactoredPolynomial& a, const FactoredPolynomial& b)
{
    if (a.factors_.size() != b.factors_.size())
        return false;
    for (std::size_t i = 0; i < a.factors_.size(); ++i)
        if (a.factors_[i].exponent != b.factors_[i].exponent || a.factors_[i].poly != b.factors_[i].poly)
            return false;
    return true;
}

RationalFunction RationalFunction::inverse_of(const MultiPoly& p)
{
    const Canonical c = canonical(p);
    RationalFunction r;
    r.numerator = MultiPoly::constant(p.vars(), c.sign);
    r.scale = c.content;
    r.denominator = FactoredPolynomial(p.vars());
    r.denominator.multiply(c.poly, 1);
    return r;
}

namespace {

unsigned exponent_or_zero(const FactoredPolynomial& f, const MultiPoly& p)
{
    return f.exponent_of(p).value_or(0);
}

// True when n is certainly not divisible by the linear polynomial f: n is
// nonzero modulo a prime at some point of {f = 0}.
bool misses_linear(const MultiPoly& n, const MultiPoly& f)
{
    if (f.total_degree() != 1)
        return false;
    constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;
    auto mul = [](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % prime);
    };
    auto to_mod = [](const mpz_class& c) { return static_cast<std::uint64_t>(mpz_fdiv_ui(c.get_mpz_t(), prime)); };
    auto inverse = [&](std::uint64_t a) {
        std::uint64_t r = 1, e = prime - 2;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    };
    const std::size_t nv = f.nvars();
    std::vector<std::uint64_t> p(nv);
    for (std::size_t i = 0; i < nv; ++i)
        p[i] = 1000003 + 7919 * i;
    std::size_t v = nv;
    std::uint64_t a = 0, b = 0;
    for (const auto& t : f.terms()) {
        const auto it = std::find(t.exp.begin(), t.exp.end(), 1u);
        const std::uint64_t c = to_mod(t.coeff);
        if (it == t.exp.end()) {
            b = (b + c) % prime;
            continue;
        }
        const std::size_t i = it - t.exp.begin();
        if (v == nv) {
            v = i;
            a = c;
        } else {
            b = (b + mul(c, p[i])) % prime;
        }
    }
    if (a == 0)
        return false;
    p[v] = mul(prime - b % prime, inverse(a)) % prime;
    std::uint64_t sum = 0;
    for (const auto& t : n.terms()) {
        std::uint64_t m = to_mod(t.coeff);
        for (std::size_t i = 0; i < nv; ++i)
            for (unsigned e = 0; e < t.exp[i]; ++e)
                m = mul(m, p[i]);
        sum = (sum + m) % prime;
    }
    return sum != 0;
}

} // namespace

RationalFunction RationalFunction::operator*(const RationalFunction& o) const
{
    RationalFunction r;
    r.numerator = numerator * o.numerator;
    r.scale = scale * o.scale;
    r.denominator = denominator;
    for (const auto& f : o.denominator.factors())
        r.denominator.multiply(f.poly, f.exponent);
    if (!r.denominator.vars())
        r.denominator = FactoredPolynomial(r.numerator.vars());
    r.reduce();
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const
{
    const VarTablePtr& vars = numerator.vars() ? numerator.vars() : o.numerator.vars();
    FactoredPolynomial common(vars);
    for (const auto& f : denominator.factors())
        common.multiply(f.poly, std::max(f.exponent, exponent_or_zero(o.denominator, f.poly)));
    for (const auto& f : o.denominator.factors())
        if (!denominator.exponent_of(f.poly))
            common.multiply(f.poly, f.exponent);
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), o.scale.get_mpz_t());
    auto lift = [&](const RationalFunction& x) {
        MultiPoly n = x.numerator.scaled(l / x.scale);
        for (const auto& f : common.factors()) {
            const unsigned have = exponent_or_zero(x.denominator, f.poly);
            if (f.exponent > have)
                n *= f.poly.pow(f.exponent - have);
        }
        return n;
    };
    RationalFunction r;
    r.numerator = lift(*this) + lift(o);
    r.scale = l;
    r.denominator = std::move(common);
    r.reduce();
    return r;
}

void RationalFunction::reduce()
{
    const VarTablePtr vars = numerator.vars() ? numerator.vars() : denominator.vars();
    if (numerator.is_zero()) {
        scale = 1;
        denominator = FactoredPolynomial(vars);
        return;
    }
    std::vector<FactoredPolynomial::Factor> work(denominator.factors().begin(), denominator.factors().end());
    std::vector<FactoredPolynomial::Factor> kept;
    while (!work.empty()) {
        FactoredPolynomial::Factor f = std::move(work.back());
        work.pop_back();
        while (f.exponent > 0) {
            if (misses_linear(numerator, f.poly))
                break;
            MultiPoly g = gcd(numerator, f.poly);
            if (g.is_constant())
                break;
            if (g == f.poly) {
                auto q = divide_exact(numerator, f.poly);
                if (!q)
                    throw std::logic_error("RationalFunction::reduce: inexact division");
                numerator = *std::move(q);
                --f.exponent;
                continue;
            }
            auto rest = divide_exact(f.poly, g);
            if (!rest)
                throw std::logic_error("RationalFunction::reduce: inexact division");
            const Canonical cr = canonical(*rest);
            if (cr.sign < 0 && f.exponent % 2 == 1)
                numerator = -numerator;
            work.push_back({g, f.exponent});
            work.push_back({cr.poly, f.exponent});
            f.exponent = 0;
        }
        if (f.exponent > 0)
            kept.push_back(std::move(f));
    }
    FactoredPolynomial d(vars);
    for (const auto& f : kept)
        d.multiply(f.poly, f.exponent);
    denominator = std::move(d);
    mpz_class c = numerator.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
    if (c != 1) {
        numerator = numerator.divided_by(c);
        scale /= c;
    }
    if (scale < 0) {
        scale = -scale;
        numerator = -numerator;
    }
}

std::string RationalFunction::to_string() const
{
    std::string den = denominator.to_string();
    if (scale != 1)
        den = (denominator.size() == 0 ? scale.get_str() : scale.get_str() + " * " + den);
    std::string num = numerator.size() > 1 ? "(" + numerator.to_string() + ")" : numerator.to_string();
    if (den == "1")
        return num;
    return num + " / (" + den + ")";
}

} // namespace eulerdisc::symcore
