#include "eulerdisc/lattice.hpp"

#include "eulerdisc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eulerdisc::lattice {

namespace {

std::int64_t narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("lattice: integer overflow");
    return static_cast<std::int64_t>(v);
}

IntVector diff(const IntVector& a, const IntVector& b)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = narrow(static_cast<__int128>(a[i]) - b[i]);
    return r;
}

std::int64_t dot(const IntVector& a, const IntVector& b)
{
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<__int128>(a[i]) * b[i];
    return narrow(s);
}

// row_a -= q * row_b
void axpy(IntVector& a, std::int64_t q, const IntVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = narrow(static_cast<__int128>(a[i]) - static_cast<__int128>(q) * b[i]);
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

std::size_t rank_of(const std::vector<IntVector>& rows) { return lattice_basis(rows).size(); }

using Mask = std::uint64_t;

std::vector<std::size_t> bits(Mask m)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; m; ++i, m >>= 1)
        if (m & 1)
            out.push_back(i);
    return out;
}

} // namespace

void PointConfiguration::validate() const
{
    for (const auto& p : points)
        if (p.size() != ambient_dimension())
            throw std::invalid_argument("point configuration: points have different lengths");
    if (!labels.empty()) {
        if (labels.size() != points.size())
            throw std::invalid_argument("point configuration: label count differs from point count");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw std::invalid_argument("point configuration: duplicate labels");
    }
}

PointConfiguration edge_config(const combi::PatternGraph& g)
{
    PointConfiguration c;
    for (const auto& e : g.edges()) {
        IntVector p(g.ambient_size(), 0);
        p[e.first] = 1;
        p[e.second] = 1;
        c.points.push_back(std::move(p));
        c.labels.push_back(g.edge_label(e));
    }
    return c;
}

IntMatrix lattice_basis(const std::vector<IntVector>& rows)
{
    IntMatrix m = rows;
    if (m.empty())
        return m;
    const std::size_t n = m.front().size();
    std::size_t cur = 0;
    for (std::size_t col = 0; col < n && cur < m.size(); ++col) {
        for (;;) {
            std::size_t best = m.size();
            for (std::size_t r = cur; r < m.size(); ++r)
                if (m[r][col] != 0 && (best == m.size() || std::llabs(m[r][col]) < std::llabs(m[best][col])))
                    best = r;
            if (best == m.size())
                break;
            std::swap(m[cur], m[best]);
            bool clean = true;
            for (std::size_t r = cur + 1; r < m.size(); ++r) {
                if (m[r][col] == 0)
                    continue;
                axpy(m[r], m[r][col] / m[cur][col], m[cur]);
                clean = clean && m[r][col] == 0;
            }
            if (clean)
                break;
        }
        if (m[cur][col] == 0)
            continue;
        if (m[cur][col] < 0)
            for (auto& x : m[cur])
                x = -x;
        for (std::size_t r = 0; r < cur; ++r) {
            std::int64_t q = m[r][col] / m[cur][col];
            if (m[r][col] - q * m[cur][col] < 0)
                --q;
            axpy(m[r], q, m[cur]);
        }
        ++cur;
    }
    m.resize(cur);
    return m;
}

IntVector lattice_coordinates(const IntMatrix& basis, const IntVector& v)
{
    IntVector x(basis.size(), 0);
    IntVector rest = v;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t p = 0;
        while (basis[i][p] == 0)
            ++p;
        if (rest[p] % basis[i][p] != 0)
            throw std::invalid_argument("lattice_coordinates: vector not in lattice");
        x[i] = rest[p] / basis[i][p];
        axpy(rest, x[i], basis[i]);
    }
    for (auto r : rest)
        if (r != 0)
            throw std::invalid_argument("lattice_coordinates: vector not in lattice");
    return x;
}

std::int64_t int_det(IntMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    bool negate = false;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const __int128 num = static_cast<__int128>(m[k][k]) * m[i][j] - static_cast<__int128>(m[i][k]) * m[k][j];
                m[i][j] = narrow(num / prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Normalized lattice_normalize(const PointConfiguration& c)
{
    c.validate();
    if (c.points.empty())
        throw std::invalid_argument("lattice_normalize: empty configuration");
    std::vector<IntVector> diffs;
    for (const auto& p : c.points)
        diffs.push_back(diff(p, c.points.front()));
    const IntMatrix basis = lattice_basis(diffs);
    Normalized out;
    out.dimension = static_cast<int>(basis.size());
    for (const auto& d : diffs)
        out.points.push_back(lattice_coordinates(basis, d));
    return out;
}

namespace {

int orientation(const std::vector<IntVector>& pts, const std::vector<int>& facet, const IntVector& x)
{
    IntMatrix m;
    const IntVector& base = pts[facet.front()];
    for (std::size_t k = 1; k < facet.size(); ++k)
        m.push_back(diff(pts[facet[k]], base));
    m.push_back(diff(x, base));
    return sign(int_det(std::move(m)));
}

} // namespace

std::int64_t lattice_volume(const std::vector<IntVector>& points, int d)
{
    if (points.empty())
        return 0;
    if (d == 0)
        return 1;
    // Initial simplex: greedily extend the affine rank in point order.
    std::vector<int> simplex{0};
    std::vector<IntVector> spanned;
    for (std::size_t i = 1; i < points.size() && static_cast<int>(simplex.size()) <= d; ++i) {
        auto trial = spanned;
        trial.push_back(diff(points[i], points[0]));
        if (rank_of(trial) == trial.size()) {
            spanned = std::move(trial);
            simplex.push_back(static_cast<int>(i));
        }
    }
    if (static_cast<int>(simplex.size()) != d + 1)
        return 0;

    std::vector<std::vector<int>> simplices;
    std::map<std::vector<int>, int> boundary; // facet -> opposite vertex
    auto add_simplex = [&](std::vector<int> s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> f;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i)
                    f.push_back(s[j]);
            std::sort(f.begin(), f.end());
            auto it = boundary.find(f);
            if (it != boundary.end())
                boundary.erase(it);
            else
                boundary.emplace(std::move(f), s[i]);
        }
        simplices.push_back(std::move(s));
    };
    add_simplex(simplex);
    std::vector<bool> used(points.size(), false);
    for (int i : simplex)
        used[i] = true;
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (used[p])
            continue;
        std::vector<std::vector<int>> visible;
        for (const auto& [facet, opp] : boundary) {
            const int sp = orientation(points, facet, points[p]);
            if (sp != 0 && sp == -orientation(points, facet, points[opp]))
                visible.push_back(facet);
        }
        for (auto& f : visible) {
            f.push_back(static_cast<int>(p));
            add_simplex(std::move(f));
        }
    }
    std::int64_t vol = 0;
    for (const auto& s : simplices) {
        IntMatrix m;
        for (std::size_t k = 1; k < s.size(); ++k)
            m.push_back(diff(points[s[k]], points[s[0]]));
        vol += std::llabs(int_det(std::move(m)));
    }
    return vol;
}

std::int64_t normalized_volume(const PointConfiguration& c)
{
    c.validate();
    if (c.points.empty())
        return 0;
    const Normalized n = lattice_normalize(c);
    return lattice_volume(n.points, n.dimension);
}

std::vector<FaceDescriptor> faces(const PointConfiguration& c, int max_dim, std::size_t max_points)
{
    if (c.points.empty())
        return {};
    const Normalized n = lattice_normalize(c);
    const int d = n.dimension;
    const std::size_t m = n.points.size();
    if (d > max_dim)
        throw SizeLimitError("face enumeration limited to dimension " + std::to_string(max_dim) + ", got " +
                             std::to_string(d));
    if (m > max_points)
        throw SizeLimitError("face enumeration limited to " + std::to_string(max_points) + " points, got " +
                             std::to_string(m));
    if (d == 0)
        return {};
    const auto& pts = n.points;

    struct Facet {
        Mask members;
        IntVector normal;
        std::int64_t offset;
    };
    std::vector<Facet> facets;
    std::vector<int> comb(d);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        Mask sub = 0;
        for (int i : comb)
            sub |= Mask{1} << i;
        bool known = false;
        for (const auto& f : facets)
            known = known || (sub & ~f.members) == 0;
        if (known)
            continue;
        IntMatrix rows;
        for (int k = 1; k < d; ++k)
            rows.push_back(diff(pts[comb[k]], pts[comb[0]]));
        // Generalized cross product by cofactor expansion along an extra row.
        IntVector normal(d);
        for (int j = 0; j < d; ++j) {
            IntMatrix minor;
            for (const auto& r : rows) {
                IntVector rr;
                for (int k = 0; k < d; ++k)
                    if (k != j)
                        rr.push_back(r[k]);
                minor.push_back(std::move(rr));
            }
            const std::int64_t det = int_det(std::move(minor));
            normal[j] = (j % 2 == 0) ? det : -det;
        }
        std::int64_t g = 0;
        for (auto x : normal)
            g = std::gcd(g, std::llabs(x));
        if (g == 0)
            continue;
        for (auto& x : normal)
            x /= g;
        const std::int64_t base = dot(normal, pts[comb[0]]);
        bool pos = false, neg = false;
        Mask on = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const std::int64_t s = dot(normal, pts[k]) - base;
            pos = pos || s > 0;
            neg = neg || s < 0;
            if (s == 0)
                on |= Mask{1} << k;
        }
        if (pos && neg)
            continue;
        if (pos)
            for (auto& x : normal)
                x = -x;
        facets.push_back({on, normal, dot(normal, pts[comb[0]])});
    } while (combi::next_combination(comb, static_cast<int>(m)));

    std::map<Mask, std::pair<IntVector, std::int64_t>> found;
    std::vector<Mask> queue;
    for (const auto& f : facets)
        if (found.emplace(f.members, std::make_pair(f.normal, f.offset)).second)
            queue.push_back(f.members);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const Mask face = queue[qi];
        for (const auto& f : facets) {
            const Mask inter = face & f.members;
            if (inter == 0 || inter == face || found.count(inter))
                continue;
            auto fn = found.at(face);
            for (int j = 0; j < d; ++j)
                fn.first[j] += f.normal[j];
            fn.second += f.offset;
            found.emplace(inter, std::move(fn));
            queue.push_back(inter);
        }
    }
    std::vector<FaceDescriptor> out;
    for (const auto& [mask, fn] : found) {
        FaceDescriptor fd;
        fd.members = bits(mask);
        fd.functional = fn.first;
        fd.offset = fn.second;
        std::vector<IntVector> diffs;
        for (std::size_t k : fd.members)
            diffs.push_back(diff(pts[k], pts[fd.members.front()]));
        fd.dimension = static_cast<int>(rank_of(diffs));
        out.push_back(std::move(fd));
    }
    std::sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
        return a.dimension != b.dimension ? a.dimension < b.dimension : a.members < b.members;
    });
    return out;
}

std::vector<std::int64_t> f_vector(const PointConfiguration& c, int max_dim, std::size_t max_points)
{
    const int d = c.points.empty() ? 0 : lattice_normalize(c).dimension;
    std::vector<std::int64_t> f(d, 0);
    for (const auto& face : faces(c, max_dim, max_points))
        ++f[face.dimension];
    return f;
}

PointConfiguration contracted_config(const combi::PatternGraph& g, const combi::PatternGraph& h)
{
    const combi::Contraction con = combi::contract(g, h);
    const auto& sv = con.surviving_vertices;
    PointConfiguration c;
    for (const auto& e : con.edges) {
        IntVector p(sv.size(), 0);
        for (int v : e.endpoints)
            p[std::lower_bound(sv.begin(), sv.end(), v) - sv.begin()] += 1;
        c.points.push_back(std::move(p));
        c.labels.push_back(g.edge_label(e.edge));
    }
    return c;
}

std::int64_t subdiagram_volume(const combi::PatternGraph& g, const combi::PatternGraph& h)
{
    if (h.left().size() == h.right().size() && !combi::condition_star(h).holds)
        throw HypothesisError("subgraph violates condition (*)");
    const PointConfiguration a = contracted_config(g, h);
    const IntMatrix basis = lattice_basis(a.points);
    const int d = static_cast<int>(basis.size());
    std::vector<IntVector> coords;
    for (const auto& p : a.points)
        coords.push_back(lattice_coordinates(basis, p));
    std::vector<IntVector> with_origin{IntVector(d, 0)};
    with_origin.insert(with_origin.end(), coords.begin(), coords.end());
    return lattice_volume(with_origin, d) - lattice_volume(coords, d);
}

std::string dump(const PointConfiguration& c)
{
    c.validate();
    std::vector<std::string> header;
    for (std::size_t i = 0; i < c.points.size(); ++i)
        header.push_back(c.labels.empty() ? std::to_string(i) : c.labels[i]);
    std::size_t width = 1;
    for (const auto& h : header)
        width = std::max(width, h.size());
    for (const auto& p : c.points)
        for (auto x : p)
            width = std::max(width, std::to_string(x).size());
    std::ostringstream os;
    auto cell = [&](const std::string& s, bool first) {
        if (!first)
            os << ' ';
        os << std::string(width - s.size(), ' ') << s;
    };
    for (std::size_t i = 0; i < header.size(); ++i)
        cell(header[i], i == 0);
    os << '\n';
    for (std::size_t r = 0; r < c.ambient_dimension(); ++r) {
        for (std::size_t i = 0; i < c.points.size(); ++i)
            cell(std::to_string(c.points[i][r]), i == 0);
        os << '\n';
    }
    return os.str();
}

} // namespace eulerdisc::lattice
