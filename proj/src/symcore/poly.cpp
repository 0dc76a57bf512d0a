#include "eulerdisc/symcore.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eulerdisc::symcore {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("VarTable: empty variable name");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("VarTable: duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VarTablePtr make_vars(std::vector<std::string> names)
{
    return std::make_shared<const VarTable>(std::move(names));
}

unsigned total_degree(const Exponent& e)
{
    unsigned d = 0;
    for (auto x : e)
        d += x;
    return d;
}

int compare_monomials(const Exponent& a, const Exponent& b)
{
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db ? 1 : -1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] > b[i] ? 1 : -1;
    return 0;
}

namespace {

struct MonomialGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return compare_monomials(a, b) > 0; }
};

} // namespace

MultiPoly::MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(VarTablePtr vars, const mpz_class& c)
{
    MultiPoly p(std::move(vars));
    if (c != 0)
        p.terms_.push_back({Exponent(p.nvars(), 0), c});
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr vars, std::size_t index)
{
    MultiPoly p(std::move(vars));
    if (index >= p.nvars())
        throw std::out_of_range("MultiPoly::variable: index out of range");
    Exponent e(p.nvars(), 0);
    e[index] = 1;
    p.terms_.push_back({std::move(e), 1});
    return p;
}

MultiPoly MultiPoly::monomial(VarTablePtr vars, Exponent exp, const mpz_class& c)
{
    MultiPoly p(std::move(vars));
    if (exp.size() != p.nvars())
        throw std::invalid_argument("MultiPoly::monomial: exponent length mismatch");
    if (c != 0)
        p.terms_.push_back({std::move(exp), c});
    return p;
}

MultiPoly MultiPoly::from_terms(VarTablePtr vars, std::vector<Term> terms)
{
    MultiPoly p(std::move(vars));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void MultiPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return compare_monomials(a.exp, b.exp) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (out.back().coeff == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

void MultiPoly::check_compatible(const MultiPoly& o) const
{
    if (vars_ == o.vars_)
        return;
    if (!vars_ || !o.vars_ || !(*vars_ == *o.vars_))
        throw std::invalid_argument("MultiPoly: operands use different variable tables");
}

bool MultiPoly::is_constant() const noexcept
{
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && symcore::total_degree(terms_.front().exp) == 0;
}

mpz_class MultiPoly::constant_value() const
{
    if (terms_.empty())
        return 0;
    const Term& last = terms_.back();
    return symcore::total_degree(last.exp) == 0 ? last.coeff : mpz_class(0);
}

unsigned MultiPoly::total_degree() const
{
    return terms_.empty() ? 0 : symcore::total_degree(terms_.front().exp);
}

unsigned MultiPoly::degree_in(std::size_t var) const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.exp[var]);
    return d;
}

std::vector<std::size_t> MultiPoly::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars(); ++v)
        for (const auto& t : terms_)
            if (t.exp[v] != 0) {
                out.push_back(v);
                break;
            }
    return out;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

namespace {

// Merge two descending term lists, b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = compare_monomials(a[i].exp, b[j].exp);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (sign < 0)
                out.back().coeff = -out.back().coeff;
        } else {
            mpz_class s = sign > 0 ? mpz_class(a[i].coeff + b[j].coeff) : mpz_class(a[i].coeff - b[j].coeff);
            if (s != 0)
                out.push_back({a[i].exp, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (!vars_)
        vars_ = o.vars_;
    check_compatible(o);
    terms_ = merge_terms(terms_, o.terms_, 1);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    if (!vars_)
        vars_ = o.vars_;
    check_compatible(o);
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_compatible(b);
    MultiPoly r(a.vars_);
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    if (b.terms_.size() == 1 || a.terms_.size() == 1) {
        // Monomial times polynomial keeps the order.
        const MultiPoly& mono = a.terms_.size() == 1 ? a : b;
        const MultiPoly& poly = a.terms_.size() == 1 ? b : a;
        const Term& m = mono.terms_.front();
        r.terms_.reserve(poly.terms_.size());
        for (const auto& t : poly.terms_) {
            Term p{t.exp, t.coeff * m.coeff};
            for (std::size_t v = 0; v < p.exp.size(); ++v)
                p.exp[v] += m.exp[v];
            r.terms_.push_back(std::move(p));
        }
        return r;
    }
    const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const MultiPoly& large = a.terms_.size() <= b.terms_.size() ? b : a;
    if (small.terms_.size() <= 8) {
        // Sum of order-preserving monomial multiples.
        for (const auto& m : small.terms_) {
            std::vector<Term> part;
            part.reserve(large.terms_.size());
            for (const auto& t : large.terms_) {
                Term p{t.exp, t.coeff * m.coeff};
                for (std::size_t v = 0; v < p.exp.size(); ++v)
                    p.exp[v] += m.exp[v];
                part.push_back(std::move(p));
            }
            r.terms_ = merge_terms(r.terms_, part, 1);
        }
        return r;
    }
    std::map<Exponent, mpz_class, MonomialGreater> acc;
    Exponent e(a.nvars());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = s.exp[v] + t.exp[v];
            acc[e] += s.coeff * t.coeff;
        }
    r.terms_.reserve(acc.size());
    for (auto& [exp, c] : acc)
        if (c != 0)
            r.terms_.push_back({exp, c});
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o)
{
    *this = *this * o;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return a.terms_.empty() || a.vars_ == b.vars_ || (a.vars_ && b.vars_ && *a.vars_ == *b.vars_);
}

MultiPoly MultiPoly::scaled(const mpz_class& c) const
{
    MultiPoly r(vars_);
    if (c == 0)
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        t.coeff *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exp[var] == 0)
            continue;
        Term d{t.exp, t.coeff * t.exp[var]};
        d.exp[var] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(vars_, std::move(out));
}

mpz_class MultiPoly::content() const
{
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

MultiPoly MultiPoly::divided_by(const mpz_class& c) const
{
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
            throw std::invalid_argument("MultiPoly::divided_by: inexact division");
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

mpq_class MultiPoly::evaluate(const std::vector<mpq_class>& point) const
{
    if (point.size() != nvars())
        throw std::invalid_argument("MultiPoly::evaluate: point has wrong dimension");
    std::vector<std::vector<mpq_class>> powers(nvars());
    mpq_class sum = 0;
    for (const auto& t : terms_) {
        mpq_class m = t.coeff;
        for (std::size_t v = 0; v < t.exp.size(); ++v) {
            const unsigned e = t.exp[v];
            if (e == 0)
                continue;
            auto& pw = powers[v];
            if (pw.empty())
                pw.push_back(1);
            while (pw.size() <= e)
                pw.push_back(pw.back() * point[v]);
            m *= pw[e];
        }
        sum += m;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const
{
    check_compatible(value);
    std::vector<MultiPoly> powers{constant(vars_, 1)};
    MultiPoly out(vars_);
    for (const auto& t : terms_) {
        const unsigned e = t.exp[var];
        while (powers.size() <= e)
            powers.push_back(powers.back() * value);
        Term rest{t.exp, t.coeff};
        rest.exp[var] = 0;
        MultiPoly m(vars_);
        m.terms_.push_back(std::move(rest));
        out += m * powers[e];
    }
    return out;
}

std::pair<MultiPoly, mpz_class> MultiPoly::substitute(std::size_t var, const mpq_class& value) const
{
    const unsigned d = degree_in(var);
    mpz_class den = 1;
    mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), d);
    // value^e * den = num^e * q^(d-e)
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const unsigned e = t.exp[var];
        mpz_class f, g;
        mpz_pow_ui(f.get_mpz_t(), value.get_num_mpz_t(), e);
        mpz_pow_ui(g.get_mpz_t(), value.get_den_mpz_t(), d - e);
        Term r{t.exp, t.coeff * f * g};
        r.exp[var] = 0;
        out.push_back(std::move(r));
    }
    return {from_terms(vars_, std::move(out)), den};
}

MultiPoly MultiPoly::rebased(const VarTablePtr& target) const
{
    std::vector<std::size_t> map(nvars());
    for (std::size_t v = 0; v < nvars(); ++v) {
        auto idx = target->find(vars_->name(v));
        bool used = false;
        for (const auto& t : terms_)
            used = used || t.exp[v] != 0;
        if (!idx) {
            if (used)
                throw std::invalid_argument("MultiPoly::rebased: variable '" + vars_->name(v) + "' missing from target");
            map[v] = static_cast<std::size_t>(-1);
        } else {
            map[v] = *idx;
        }
    }
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Exponent e(target->size(), 0);
        for (std::size_t v = 0; v < nvars(); ++v)
            if (t.exp[v] != 0)
                e[map[v]] = t.exp[v];
        out.push_back({std::move(e), t.coeff});
    }
    return from_terms(target, std::move(out));
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff < 0;
        mpz_class mag = abs(t.coeff);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const bool is_const = symcore::total_degree(t.exp) == 0;
        bool need_star = false;
        if (is_const || mag != 1) {
            os << mag.get_str();
            need_star = true;
        }
        for (std::size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0)
                continue;
            if (need_star)
                os << '*';
            os << vars_->name(v);
            if (t.exp[v] > 1)
                os << '^' << t.exp[v];
            need_star = true;
        }
    }
    return os.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("divide_exact: division by zero polynomial");
    MultiPoly q(a.vars());
    if (a.is_zero())
        return q;
    if (b.is_constant()) {
        const mpz_class c = b.constant_value();
        for (const auto& t : a.terms())
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
                return std::nullopt;
        return a.divided_by(c);
    }
    if (a.total_degree() < b.total_degree())
        return std::nullopt;
    const Term& lb = b.leading();
    std::map<Exponent, mpz_class, MonomialGreater> r;
    for (const auto& t : a.terms())
        r.emplace(t.exp, t.coeff);
    std::vector<Term> qterms;
    Exponent e(a.nvars());
    while (!r.empty()) {
        const auto lr = r.begin();
        Term t{lr->first, 0};
        for (std::size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] < lb.exp[v])
                return std::nullopt;
            t.exp[v] -= lb.exp[v];
        }
        if (!mpz_divisible_p(lr->second.get_mpz_t(), lb.coeff.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(t.coeff.get_mpz_t(), lr->second.get_mpz_t(), lb.coeff.get_mpz_t());
        r.erase(lr);
        for (std::size_t i = 1; i < b.terms().size(); ++i) {
            const Term& bt = b.terms()[i];
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = t.exp[v] + bt.exp[v];
            auto [it, inserted] = r.try_emplace(e, 0);
            it->second -= t.coeff * bt.coeff;
            if (it->second == 0)
                r.erase(it);
        }
        qterms.push_back(std::move(t));
    }
    return MultiPoly::from_terms(a.vars(), std::move(qterms));
}

Canonical canonical(const MultiPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("canonical: zero polynomial");
    Canonical c;
    c.content = p.content();
    c.sign = p.leading().coeff < 0 ? -1 : 1;
    mpz_class d = c.content * c.sign;
    c.poly = p.divided_by(d);
    return c;
}

bool factor_order_less(const MultiPoly& a, const MultiPoly& b)
{
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = compare_monomials(a.terms()[i].exp, b.terms()[i].exp);
        if (c != 0)
            return c > 0;
        if (a.terms()[i].coeff != b.terms()[i].coeff)
            return a.terms()[i].coeff > b.terms()[i].coeff;
    }
    return a.size() < b.size();
}

} // namespace eulerdisc::symcore
