#include "eulerdisc/matroid.hpp"

#include "eulerdisc/errors.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace eulerdisc::matroid {

LinearMatroid::LinearMatroid(const RationalMatrix& m) : rows_(m.rows())
{
    if (m.cols() > 63)
        throw SizeLimitError("matroid ground set limited to 63 elements");
    for (std::size_t c = 0; c < m.cols(); ++c) {
        mpz_class l = 1;
        for (std::size_t r = 0; r < m.rows(); ++r)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
        std::vector<mpz_class> col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            mpq_class v = m.at(r, c) * l;
            col[r] = v.get_num();
        }
        columns_.push_back(std::move(col));
    }
}

int LinearMatroid::rank(Mask s) const
{
    std::vector<std::vector<mpz_class>> a;
    for (std::size_t c = 0; c < columns_.size(); ++c)
        if (s >> c & 1)
            a.push_back(columns_[c]);
    int r = 0;
    for (std::size_t col = 0; col < rows_ && r < static_cast<int>(a.size()); ++col) {
        std::size_t p = r;
        while (p < a.size() && a[p][col] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][col] == 0)
                continue;
            const mpz_class f = a[i][col], piv = a[r][col];
            mpz_class g = 0;
            for (std::size_t j = col; j < rows_; ++j) {
                a[i][j] = a[i][j] * piv - f * a[r][j];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i][j].get_mpz_t());
            }
            if (g > 1)
                for (std::size_t j = col; j < rows_; ++j)
                    mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), g.get_mpz_t());
        }
        ++r;
    }
    return r;
}

BasisMatroid::BasisMatroid(std::size_t size, std::vector<Mask> bases) : n_(size), bases_(std::move(bases))
{
    if (n_ > 63)
        throw SizeLimitError("matroid ground set limited to 63 elements");
    if (bases_.empty())
        throw std::invalid_argument("BasisMatroid: no bases");
}

int BasisMatroid::rank(Mask s) const
{
    int best = 0;
    for (Mask b : bases_)
        best = std::max(best, std::popcount(s & b));
    return best;
}

namespace {

class BetaSolver {
public:
    explicit BetaSolver(const Matroid& m) : m_(m) {}

    std::int64_t solve() { return rec(0, m_.ground()); }

private:
    int r(Mask s)
    {
        auto it = rank_cache_.find(s);
        if (it != rank_cache_.end())
            return it->second;
        const int v = m_.rank(s);
        rank_cache_.emplace(s, v);
        return v;
    }

    Mask closure(Mask c)
    {
        const int rc = r(c);
        Mask out = c;
        for (std::size_t x = 0; x < m_.size(); ++x) {
            const Mask bit = Mask{1} << x;
            if (!(c & bit) && r(c | bit) == rc)
                out |= bit;
        }
        return out;
    }

    std::int64_t rec(Mask contracted, Mask rest)
    {
        if (rest == 0)
            return 0;
        const int rc = r(contracted);
        for (Mask t = rest; t; t &= t - 1) {
            const Mask bit = t & -t;
            if (r(contracted | bit) == rc)
                return 0;
        }
        if (std::popcount(rest) == 1)
            return 1;
        const Mask e = rest & -rest;
        const Mask rest2 = rest & ~e;
        if (r(contracted | rest2) < r(contracted | rest))
            return 0;
        const auto key = std::make_pair(rest, closure(contracted));
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        const std::int64_t v = rec(contracted, rest2) + rec(contracted | e, rest2);
        memo_.emplace(key, v);
        return v;
    }

    const Matroid& m_;
    std::unordered_map<Mask, int> rank_cache_;
    std::map<std::pair<Mask, Mask>, std::int64_t> memo_;
};

} // namespace

std::int64_t beta(const Matroid& m)
{
    if (m.size() == 0)
        throw std::invalid_argument("beta: empty ground set");
    return BetaSolver(m).solve();
}

std::int64_t beta_subset_sum(const Matroid& m)
{
    if (m.size() > 24)
        throw SizeLimitError("subset-sum beta limited to 24 elements");
    std::int64_t sum = 0;
    for (Mask s = 0; s <= m.ground(); ++s)
        sum += (std::popcount(s) % 2 == 0 ? 1 : -1) * m.rank(s);
    return m.rank() % 2 == 0 ? sum : -sum;
}

std::vector<std::vector<mpz_class>> tutte_polynomial(const Matroid& m)
{
    if (m.size() > 24)
        throw SizeLimitError("Tutte expansion limited to 24 elements");
    const int rk = m.rank();
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<mpz_class>> t(rk + 1, std::vector<mpz_class>(n - rk + 1, 0));
    auto binom = [](int a, int b) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), a, b);
        return c;
    };
    for (Mask s = 0; s <= m.ground(); ++s) {
        const int rs = m.rank(s);
        const int a = rk - rs, b = std::popcount(s) - rs;
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) {
                mpz_class c = binom(a, i) * binom(b, j);
                if ((a - i + b - j) % 2)
                    c = -c;
                t[i][j] += c;
            }
    }
    return t;
}

std::int64_t signed_euler_char(const RationalMatrix& z)
{
    return beta(LinearMatroid(z.with_identity_prefix()));
}

GenericSample generic_euler_char(const ParamFamily& f, const std::vector<symcore::MultiPoly>& avoid, int trials,
                                 std::mt19937_64& rng)
{
    if (trials < 1)
        throw std::invalid_argument("generic_euler_char: trials must be positive");
    GenericSample out;
    const std::size_t n = f.params ? f.params->size() : 0;
    int attempts = 0;
    while (static_cast<int>(out.points.size()) < trials) {
        if (++attempts > 50 * trials)
            throw HypothesisError("no point off the discriminant found after " + std::to_string(attempts - 1) +
                                  " samples");
        auto p = random_rational_point(rng, n);
        bool ok = true;
        for (const auto& a : avoid)
            if (a.evaluate(p) == 0) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        const std::int64_t chi = signed_euler_char(f.evaluate(p));
        if (!out.points.empty() && chi != out.chi)
            throw HypothesisError("generic Euler characteristic differs between samples (" + std::to_string(out.chi) +
                                  " vs " + std::to_string(chi) + ")");
        out.chi = chi;
        out.points.push_back(std::move(p));
    }
    return out;
}

std::int64_t generic_euler_char(const ParamFamily& f, int trials, std::uint64_t seed)
{
    std::vector<symcore::MultiPoly> avoid;
    for (auto& m : f.minors())
        if (!m.value.is_zero())
            avoid.push_back(std::move(m.value));
    std::mt19937_64 rng(seed);
    return generic_euler_char(f, avoid, trials, rng).chi;
}

} // namespace eulerdisc::matroid
