#pragma once
//
// Exact sparse multivariate polynomials over Z.
//
// Terms are kept sorted in descending graded-lexicographic order, where the
// lexicographic tie-break follows the position of a variable in its VarTable
// (position 0 is the most significant).  A polynomial never stores a zero
// coefficient, so structural equality is mathematical equality.
//

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eulerdisc::symcore {

class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic comparison: negative, zero or positive.
int compare_monomials(const Exponent& a, const Exponent& b);
unsigned total_degree(const Exponent& e);

struct Term {
    Exponent exp;
    mpz_class coeff;
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(VarTablePtr vars);

    static MultiPoly constant(VarTablePtr vars, const mpz_class& c);
    static MultiPoly variable(VarTablePtr vars, std::size_t index);
    static MultiPoly monomial(VarTablePtr vars, Exponent exp, const mpz_class& c);

    const VarTablePtr& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term if the polynomial is constant; zero for the zero polynomial.
    mpz_class constant_value() const;

    const Term& leading() const { return terms_.front(); }
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    /// Variables that occur with positive exponent, ascending by index.
    std::vector<std::size_t> support() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly scaled(const mpz_class& c) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;
    /// Formal partial derivative.
    MultiPoly derivative(std::size_t var) const;
    /// Gcd of the integer coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// Divide every coefficient by c, which must divide all of them.
    MultiPoly divided_by(const mpz_class& c) const;

    mpq_class evaluate(const std::vector<mpq_class>& point) const;
    /// Replace variable `var` by `value` (sharing this VarTable).
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
    /// Replace variable `var` by a rational number; returns numerator/denominator.
    std::pair<MultiPoly, mpz_class> substitute(std::size_t var, const mpq_class& value) const;
    /// Same polynomial expressed over another table containing every variable used here.
    MultiPoly rebased(const VarTablePtr& target) const;

    std::string to_string() const;

    /// Construct from unsorted terms; merges duplicates and drops zeros.
    static MultiPoly from_terms(VarTablePtr vars, std::vector<Term> terms);

private:
    void check_compatible(const MultiPoly& o) const;
    void normalize();

    VarTablePtr vars_;
    std::vector<Term> terms_;
};

/// Exact quotient a / b, or nullopt if b does not divide a in Z[vars].
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

struct Canonical {
    MultiPoly poly;
    int sign = 1;
    mpz_class content;
};

/// Strip integer content and make the leading coefficient positive.
Canonical canonical(const MultiPoly& p);
inline MultiPoly canonical_poly(const MultiPoly& p) { return canonical(p).poly; }

/// Primitive gcd with positive leading coefficient.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Pairwise coprime, squarefree, canonical basis of the non-constant parts of `ps`.
std::vector<MultiPoly> coprime_basis(const std::vector<MultiPoly>& ps);

/// Exponents e with p = c * prod basis[i]^e[i] for some rational c, or nullopt.
std::optional<std::vector<unsigned>> factor_over_basis(const MultiPoly& p, const std::vector<MultiPoly>& basis);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant by cofactor expansion (size <= 3) or Bareiss elimination.
MultiPoly det(const PolyMatrix& m);
MultiPoly det_cofactor(const PolyMatrix& m);

MultiPoly parse(std::string_view text, const VarTablePtr& vars);

/// Factor ordering used by FactoredPolynomial: ascending total degree, then
/// descending leading monomial, then remaining terms.
bool factor_order_less(const MultiPoly& a, const MultiPoly& b);

class FactoredPolynomial {
public:
    struct Factor {
        MultiPoly poly;
        unsigned exponent = 1;
    };

    FactoredPolynomial() = default;
    explicit FactoredPolynomial(VarTablePtr vars) : vars_(std::move(vars)) {}

    /// Multiply by f^e; f is canonicalized and merged with an equal factor.
    void multiply(const MultiPoly& f, unsigned e = 1);

    const VarTablePtr& vars() const noexcept { return vars_; }
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    unsigned total_degree() const;
    std::optional<unsigned> exponent_of(const MultiPoly& f) const;
    MultiPoly expand() const;
    FactoredPolynomial reduced() const;
    std::string to_string() const;

    friend bool operator==(const FactoredPolynomial& a, const FactoredPolynomial& b);

private:
    VarTablePtr vars_;
    std::vector<Factor> factors_;
};

/// numerator / (scale * denominator) with gcd(numerator, denominator) = 1.
struct RationalFunction {
    MultiPoly numerator;
    mpz_class scale = 1;
    FactoredPolynomial denominator;

    static RationalFunction inverse_of(const MultiPoly& p);
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator+(const RationalFunction& o) const;
    /// Cancel common factors between numerator and denominator.
    void reduce();
    std::string to_string() const;
};

} // namespace eulerdisc::symcore
