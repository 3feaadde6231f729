#include "drlab/fq.hpp"

#include <algorithm>

namespace drlab {
namespace {

using PVec = std::vector<std::uint32_t>;  // dense poly over F_p, lowest first

void ptrim(PVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PVec padd(const PVec& a, const PVec& b, std::uint32_t p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    ptrim(r);
    return r;
}

PVec psub(const PVec& a, const PVec& b, std::uint32_t p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    ptrim(r);
    return r;
}

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    ptrim(r);
    return r;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on machine ints
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t quot = r / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(r -= quot * newr, newr);
    }
    if (r != 1) throw division_by_zero();
    return static_cast<std::uint32_t>((t % p + p) % p);
}

PVec pmod(PVec a, const PVec& m, std::uint32_t p) {
    ptrim(a);
    std::uint32_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PVec pgcd(PVec a, PVec b, std::uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PVec ppowmod(PVec base, Int n, const PVec& m, std::uint32_t p) {
    PVec result{1};
    base = pmod(std::move(base), m, p);
    while (n > 0) {
        if ((n & 1) != 0) result = pmod(pmul(result, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        n >>= 1;
    }
    return result;
}

// f monic irreducible over F_p iff x^{p^n} = x (mod f) and
// gcd(x^{p^{n/l}} - x, f) = 1 for each prime l | n.
bool is_irreducible_mod_p(const PVec& f, std::uint32_t p) {
    if (f.size() < 2) return false;
    std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
    PVec x{0, 1};
    Int pn = 1;
    for (std::uint32_t i = 0; i < n; ++i) pn *= p;
    PVec xpn = ppowmod(x, pn, f, p);
    if (psub(xpn, pmod(x, f, p), p) != PVec{}) return false;
    for (std::uint32_t l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (std::uint32_t d = 2; d * d <= l; ++d)
            if (l % d == 0) lprime = false;
        if (!lprime) continue;
        Int pk = 1;
        for (std::uint32_t i = 0; i < n / l; ++i) pk *= p;
        PVec xpk = ppowmod(x, pk, f, p);
        PVec g = pgcd(psub(xpk, pmod(x, f, p), p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FqConfigPtr FqConfig::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    if (!is_prime_u32(p)) throw config_mismatch("p must be prime");
    if (e == 0) throw config_mismatch("e must be positive");
    if (modulus.empty()) {
        if (e != 1) throw config_mismatch("extension field needs an explicit modulus");
        modulus = {0, 1};
    }
    for (auto& c : modulus) c %= p;
    if (modulus.size() != e + 1 || modulus.back() != 1)
        throw config_mismatch("modulus must be monic of degree e");
    if (e > 1 && !is_irreducible_mod_p(modulus, p))
        throw config_mismatch("modulus is reducible over F_p");
    std::int64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q > (std::int64_t(1) << 40)) throw config_mismatch("q too large");
        q *= p;
    }
    auto cfg = std::shared_ptr<FqConfig>(new FqConfig());
    cfg->p_ = p;
    cfg->e_ = e;
    cfg->q_ = q;
    cfg->modulus_ = std::move(modulus);
    return cfg;
}

FqElem::FqElem(FqConfigPtr cfg, std::vector<std::uint32_t> coeffs) : cfg_(std::move(cfg)) {
    if (!cfg_) throw config_mismatch("null field config");
    coeffs.resize(cfg_->e(), 0);
    for (auto& c : coeffs) c %= cfg_->p();
    coeffs_ = std::move(coeffs);
}

FqElem FqElem::zero(const FqConfigPtr& cfg) { return FqElem(cfg, {}); }

FqElem FqElem::one(const FqConfigPtr& cfg) { return FqElem(cfg, {1}); }

FqElem FqElem::from_int(const FqConfigPtr& cfg, std::int64_t n) {
    std::int64_t m = n % cfg->p();
    if (m < 0) m += cfg->p();
    return FqElem(cfg, {static_cast<std::uint32_t>(m)});
}

FqElem FqElem::from_index(const FqConfigPtr& cfg, std::int64_t index) {
    std::vector<std::uint32_t> c(cfg->e());
    for (std::uint32_t i = 0; i < cfg->e(); ++i) {
        c[i] = static_cast<std::uint32_t>(index % cfg->p());
        index /= cfg->p();
    }
    return FqElem(cfg, std::move(c));
}

std::int64_t FqElem::index() const {
    std::int64_t idx = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) idx = idx * cfg_->p() + coeffs_[i];
    return idx;
}

bool FqElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FqElem::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](std::uint32_t c) { return c == 0; });
}

void FqElem::check_config(const FqElem& o) const {
    if (!cfg_ || !o.cfg_) throw config_mismatch("uninitialized field element");
    if (cfg_ != o.cfg_ && !cfg_->same_as(*o.cfg_))
        throw config_mismatch("field elements from different configurations");
}

FqElem FqElem::operator+(const FqElem& o) const {
    check_config(o);
    std::vector<std::uint32_t> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + o.coeffs_[i]) % cfg_->p();
    return FqElem(cfg_, std::move(c));
}

FqElem FqElem::operator-(const FqElem& o) const {
    check_config(o);
    std::vector<std::uint32_t> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = (c[i] + cfg_->p() - o.coeffs_[i]) % cfg_->p();
    return FqElem(cfg_, std::move(c));
}

FqElem FqElem::operator-() const { return zero(cfg_) - *this; }

FqElem FqElem::operator*(const FqElem& o) const {
    check_config(o);
    PVec prod = pmul(coeffs_, o.coeffs_, cfg_->p());
    if (cfg_->e() > 1) prod = pmod(std::move(prod), cfg_->modulus(), cfg_->p());
    return FqElem(cfg_, std::move(prod));
}

FqElem FqElem::inv() const {
    if (is_zero()) throw division_by_zero();
    if (cfg_->e() == 1) return FqElem(cfg_, {inv_mod_p(coeffs_[0], cfg_->p())});
    // x^{q-2} = x^{-1} in F_q^*
    return pow(Int(cfg_->q()) - 2);
}

FqElem FqElem::pow(const Int& n) const {
    if (n < 0) return inv().pow(-n);
    FqElem result = one(cfg_);
    FqElem base = *this;
    Int m = n;
    while (m > 0) {
        if ((m & 1) != 0) result = result * base;
        base = base * base;
        m >>= 1;
    }
    return result;
}

FqElem FqElem::pth_root() const {
    Int exp = 1;
    for (std::uint32_t i = 0; i + 1 < cfg_->e(); ++i) exp *= cfg_->p();
    return pow(exp);
}

bool FqElem::operator==(const FqElem& o) const {
    check_config(o);
    return coeffs_ == o.coeffs_;
}

}  // namespace drlab
