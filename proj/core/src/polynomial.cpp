#include "lambda2/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace lambda2 {

namespace {
const BigInt kZero = 0;

int sgn(const BigInt& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending_coeffs) {
    coeffs_.assign(ascending_coeffs.begin(), ascending_coeffs.end());
    normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(int k, BigInt c) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, 0);
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const BigInt& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat IntPolynomial::operator()(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPolynomial::sign_at(const BigRat& x) const {
    if (is_zero()) return 0;
    // sign of sum c_i num^i den^(d-i); den > 0, so this matches sign of p(x)
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    BigInt acc = 0;
    BigInt den_pow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * num + *it * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

int IntPolynomial::sign_at_infinity(int direction) const {
    if (is_zero()) return 0;
    int s = sgn(coeffs_.back());
    if (direction < 0 && degree() % 2 == 1) s = -s;
    return s;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeff(i);
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.str();
        if (i > 0) {
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial pow(const IntPolynomial& p, int k) {
    if (k < 0) throw Error("negative polynomial power");
    IntPolynomial r = IntPolynomial::constant(1);
    IntPolynomial base = p;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

IntPolynomial derivative(const IntPolynomial& p) {
    if (p.degree() <= 0) return {};
    std::vector<BigInt> c(p.degree());
    for (int i = 1; i <= p.degree(); ++i) c[i - 1] = p.coeff(i) * i;
    return IntPolynomial(std::move(c));
}

BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    std::vector<BigInt> c(p.coefficients());
    for (auto& x : c) x /= g;
    return IntPolynomial(std::move(c));
}

namespace {

// Remainder of lead(b)^(deg a - deg b + 1) * a divided by b; exact in Z[x].
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(a.coefficients());
    const int db = b.degree();
    const BigInt& lb = b.leading();
    int dr = a.degree();
    int steps = dr - db + 1;
    while (dr >= db) {
        BigInt top = r[dr];
        for (int i = 0; i <= dr; ++i) r[i] *= lb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= top * b.coeff(i);
        --steps;
        while (dr >= 0 && r[dr] == 0) --dr;
        r.resize(dr + 1);
        if (dr < db) break;
    }
    // keep the multiplier exactly lead(b)^(da-db+1) for a predictable sign
    IntPolynomial rem{std::move(r)};
    if (steps > 0) {
        BigInt fix = 1;
        for (int i = 0; i < steps; ++i) fix *= lb;
        std::vector<BigInt> c(rem.coefficients());
        for (auto& x : c) x *= fix;
        rem = IntPolynomial(std::move(c));
    }
    return rem;
}

}  // namespace

IntPolynomial div_exact(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw Error("division by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree())
        throw InexactDivision("inexact polynomial division (degree too small)", p, 1);

    const BigInt& lq = q.leading();
    std::vector<BigInt> rem(p.coefficients());
    std::vector<BigInt> quot(p.degree() - q.degree() + 1, 0);
    int dr = p.degree();
    bool integral = true;
    while (dr >= q.degree() && integral) {
        BigInt head = rem[dr];
        BigInt c = head / lq;
        if (c * lq != head) {
            integral = false;
            break;
        }
        int shift = dr - q.degree();
        quot[shift] = c;
        for (int i = 0; i <= q.degree(); ++i) rem[shift + i] -= c * q.coeff(i);
        while (dr >= 0 && rem[dr] == 0) --dr;
    }
    if (integral && dr < 0) return IntPolynomial(std::move(quot));

    // Inexact: recompute the remainder over Q for the error payload.
    BigInt den = 1;
    std::vector<BigRat> r(p.coefficients().begin(), p.coefficients().end());
    int d = p.degree();
    while (d >= q.degree()) {
        BigRat c = r[d] / BigRat(lq);
        int shift = d - q.degree();
        for (int i = 0; i <= q.degree(); ++i) r[shift + i] -= c * BigRat(q.coeff(i));
        --d;
        while (d >= 0 && r[d] == 0) --d;
    }
    for (int i = 0; i <= d; ++i) den = boost::multiprecision::lcm(den, denominator(r[i]));
    std::vector<BigInt> num(d + 1);
    for (int i = 0; i <= d; ++i) num[i] = numerator(r[i]) * (den / denominator(r[i]));
    throw InexactDivision("inexact polynomial division", IntPolynomial(std::move(num)), den);
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial a = primitive_part(p);
    IntPolynomial b = primitive_part(q);
    if (a.is_zero()) return b.is_zero() || b.leading() > 0 ? b : -b;
    if (b.is_zero()) return a.leading() > 0 ? a : -a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a.leading() > 0 ? a : -a;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("squarefree part of the zero polynomial");
    IntPolynomial pp = primitive_part(p);
    if (pp.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial g = gcd(pp, derivative(pp));
    IntPolynomial q = primitive_part(div_exact(pp, g));
    return q.leading() > 0 ? q : -q;
}

SturmChain sturm_chain(const IntPolynomial& p) {
    SturmChain chain;
    if (p.is_zero()) return chain;
    chain.polys.push_back(p);
    if (p.degree() == 0) return chain;
    chain.polys.push_back(derivative(p));
    while (chain.polys.back().degree() > 0) {
        const IntPolynomial& a = chain.polys[chain.polys.size() - 2];
        const IntPolynomial& b = chain.polys.back();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // pseudo multiplier lead(b)^(da-db+1): flip so that r is a positive
        // multiple of -rem(a, b)
        int mult_sign = (b.leading() > 0 || (a.degree() - b.degree() + 1) % 2 == 0) ? 1 : -1;
        if (mult_sign > 0) r = -r;
        chain.polys.push_back(primitive_part(r));
    }
    return chain;
}

int sign_variations(const SturmChain& chain, const BigRat& at) {
    int count = 0, prev = 0;
    for (const auto& g : chain.polys) {
        int s = g.sign_at(at);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int sign_variations_at_infinity(const SturmChain& chain, int direction) {
    int count = 0, prev = 0;
    for (const auto& g : chain.polys) {
        int s = g.sign_at_infinity(direction);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

BigRat cauchy_root_bound(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("root bound of the zero polynomial");
    BigInt lead = p.leading();
    if (lead < 0) lead = -lead;
    BigInt mx = 0;
    for (int i = 0; i < p.degree(); ++i) {
        BigInt c = p.coeff(i);
        if (c < 0) c = -c;
        mx = std::max(mx, c);
    }
    return BigRat(1) + BigRat(mx, lead);
}

int count_distinct_roots_in(const IntPolynomial& p,
                            const std::optional<BigRat>& a,
                            const std::optional<BigRat>& b) {
    if (p.is_zero()) throw Error("root count of the zero polynomial");
    if (a && b && !(*a < *b)) throw Error("count_distinct_roots_in: need a < b");
    IntPolynomial q = squarefree_part(p);
    if (a && q.sign_at(*a) == 0) throw EndpointIsRoot("left endpoint is a root");
    if (b && q.sign_at(*b) == 0) throw EndpointIsRoot("right endpoint is a root");
    SturmChain chain = sturm_chain(q);
    int va = a ? sign_variations(chain, *a) : sign_variations_at_infinity(chain, -1);
    int vb = b ? sign_variations(chain, *b) : sign_variations_at_infinity(chain, +1);
    return va - vb;
}

int descartes_sign_changes(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("Descartes count of the zero polynomial");
    int count = 0, prev = 0;
    for (const auto& c : p.coefficients()) {
        int s = sgn(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

BigRat refine_root(const IntPolynomial& p, const BigRat& a, const BigRat& b, const BigRat& tol) {
    if (!(a < b) || tol <= 0) throw Error("refine_root: need a < b and tol > 0");
    IntPolynomial q = squarefree_part(p);
    BigRat lo = a, hi = b;
    int slo = q.sign_at(lo), shi = q.sign_at(hi);
    if (slo == 0) return lo;
    if (shi == 0) return hi;
    if (slo == shi) throw NoSignChange("no sign change over the bracket");
    while (hi - lo > tol) {
        BigRat mid = (lo + hi) / 2;
        int sm = q.sign_at(mid);
        if (sm == 0) return mid;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

IntMatrix::IntMatrix(int n, std::vector<BigInt> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(n) * n) throw Error("IntMatrix: wrong entry count");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw Error("IntMatrix: size mismatch");
    const int n = a.n_;
    IntMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntPolynomial charpoly_exact(const IntMatrix& m) {
    const int n = m.size();
    if (n == 0) return IntPolynomial::constant(1);
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    IntMatrix mk = m;  // M_1 = A
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A * (M_{k-1} + c_{n-k+1} I)
            IntMatrix t = mk;
            for (int i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
            mk = m * t;
        }
        BigInt tr = mk.trace();
        BigInt ck = -tr / k;
        if (ck * k != -tr) throw Error("charpoly: inexact trace division");
        c[n - k] = ck;
    }
    return IntPolynomial(std::move(c));
}

}  // namespace lambda2
