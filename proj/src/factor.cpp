#include "drlab/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace drlab {
namespace {

PolyT poly_mulmod(const PolyT& a, const PolyT& b, const PolyT& m) { return (a * b) % m; }

PolyT poly_powmod(PolyT base, Int n, const PolyT& m) {
    const FqElem one = FqElem::one(m.lead().config());
    PolyT result = PolyT::constant(one);
    base = base % m;
    while (n > 0) {
        if ((n & 1) != 0) result = poly_mulmod(result, base, m);
        base = poly_mulmod(base, base, m);
        n >>= 1;
    }
    return result;
}

Int q_pow(std::int64_t q, std::int64_t d) {
    Int r = 1;
    for (std::int64_t i = 0; i < d; ++i) r *= q;
    return r;
}

// x^{q^d} mod f.
PolyT frob_power_mod(const PolyT& f, std::int64_t d) {
    const auto cfg = f.lead().config();
    PolyT x = PolyT::gen(FqElem::one(cfg));
    return poly_powmod(x, q_pow(cfg->q(), d), f);
}

// p-th root of f, valid when f'(T) = 0, i.e. f is a polynomial in T^p.
PolyT pth_root_poly(const PolyT& f) {
    const auto cfg = f.lead().config();
    std::vector<FqElem> r;
    for (std::int64_t i = 0; i * cfg->p() <= f.degree(); ++i)
        r.push_back(f.coeff(i * cfg->p()).pth_root());
    return PolyT(std::move(r));
}

// Monic squarefree part decomposition: returns (squarefree monic g_i, mult m_i)
// with f/lead = prod g_i^{m_i}, the g_i pairwise coprime.
void squarefree_decompose(const PolyT& f, std::int64_t outer_mult,
                          std::vector<std::pair<PolyT, std::int64_t>>& out) {
    if (f.degree() < 1) return;
    const auto cfg = f.lead().config();
    PolyT fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decompose(pth_root_poly(f), outer_mult * cfg->p(), out);
        return;
    }
    PolyT g = upoly_gcd(f, fp);
    PolyT w = (f / g).monic();  // product of factors of f, each once
    std::int64_t i = 1;
    PolyT rest = g.monic();
    while (w.degree() >= 1) {
        PolyT y = upoly_gcd(w, rest);
        PolyT part = (w / y).monic();  // factors of exact multiplicity i
        if (part.degree() >= 1) out.emplace_back(part, outer_mult * i);
        w = std::move(y);
        if (!w.is_zero() && w.degree() >= 0) rest = (rest / w).monic();
        ++i;
        if (i > f.degree() + 1) break;
    }
    // whatever is left in rest is a p-th power
    if (rest.degree() >= 1) {
        PolyT rp = rest.derivative();
        if (rp.is_zero())
            squarefree_decompose(pth_root_poly(rest), outer_mult * cfg->p(), out);
        else
            squarefree_decompose(rest, outer_mult, out);  // should not occur
    }
}

PolyT random_poly_below(std::int64_t deg_bound, const FqConfigPtr& cfg, std::mt19937_64& rng) {
    std::vector<FqElem> c;
    std::uniform_int_distribution<std::int64_t> dist(0, cfg->q() - 1);
    for (std::int64_t i = 0; i < deg_bound; ++i) c.push_back(FqElem::from_index(cfg, dist(rng)));
    return PolyT(std::move(c));
}

// Cantor-Zassenhaus split of a monic squarefree product of irreducibles of
// equal degree d.
void equal_degree_split(const PolyT& f, std::int64_t d, std::mt19937_64& rng,
                        std::vector<PolyT>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const auto cfg = f.lead().config();
    const FqElem one = FqElem::one(cfg);
    PolyT g;
    for (int attempt = 0; attempt < 256; ++attempt) {
        PolyT a = random_poly_below(f.degree(), cfg, rng);
        if (a.degree() < 1) continue;
        PolyT h;
        if (cfg->p() == 2) {
            // trace map over F_2: sum of a^{2^i} for i < d*e
            PolyT t = a % f;
            PolyT term = t;
            for (std::int64_t i = 1; i < d * cfg->e(); ++i) {
                term = poly_mulmod(term, term, f);
                t = t + term;
            }
            h = t;
        } else {
            Int exp = (q_pow(cfg->q(), d) - 1) / 2;
            h = poly_powmod(a, exp, f) - PolyT::constant(one);
        }
        g = upoly_gcd(h, f);
        if (g.degree() >= 1 && g.degree() < f.degree()) break;
        g = PolyT::zero();
    }
    if (g.is_zero())
        throw error("equal-degree splitting failed to find a proper factor");
    equal_degree_split(g, d, rng, out);
    equal_degree_split((f / g).monic(), d, rng, out);
}

bool poly_less(const PolyT& a, const PolyT& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::int64_t i = a.degree(); i >= 0; --i) {
        std::int64_t ai = a.coeff(i).index(), bi = b.coeff(i).index();
        if (ai != bi) return ai < bi;
    }
    return false;
}

}  // namespace

std::vector<FactorTerm> upoly_factor(const PolyT& f, std::uint64_t seed) {
    if (f.is_zero()) throw domain_error("factorization of the zero polynomial");
    std::vector<FactorTerm> result;
    if (f.degree() == 0) return result;
    std::mt19937_64 rng(seed);

    std::vector<std::pair<PolyT, std::int64_t>> squarefree;
    squarefree_decompose(f.monic(), 1, squarefree);

    for (auto& [part, mult] : squarefree) {
        // distinct-degree split of the squarefree part
        PolyT rest = part.monic();
        const auto cfg = rest.lead().config();
        PolyT x = PolyT::gen(FqElem::one(cfg));
        PolyT frob = x;  // x^{q^d} mod rest, maintained incrementally
        for (std::int64_t d = 1; rest.degree() >= 1; ++d) {
            if (rest.degree() < 2 * d) {
                result.push_back({rest.monic(), mult});
                break;
            }
            frob = poly_powmod(frob, q_pow(cfg->q(), 1), rest);
            PolyT g = upoly_gcd(frob - x, rest);
            if (g.degree() >= 1) {
                std::vector<PolyT> irreducibles;
                equal_degree_split(g, d, rng, irreducibles);
                for (auto& p : irreducibles) result.push_back({std::move(p), mult});
                rest = (rest / g).monic();
                frob = frob % rest;
            }
        }
    }
    std::sort(result.begin(), result.end(),
              [](const FactorTerm& a, const FactorTerm& b) { return poly_less(a.poly, b.poly); });
    return result;
}

bool upoly_is_irreducible(const PolyT& f) {
    if (f.degree() < 1) return false;
    const auto cfg = f.lead().config();
    std::int64_t n = f.degree();
    PolyT x = PolyT::gen(FqElem::one(cfg));
    // x^{q^n} = x mod f, and gcd(x^{q^{n/l}} - x, f) = 1 for primes l | n
    if (!(frob_power_mod(f, n) - (x % f)).is_zero()) return false;
    for (std::int64_t l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (std::int64_t d = 2; d * d <= l; ++d)
            if (l % d == 0) lprime = false;
        if (!lprime) continue;
        PolyT g = upoly_gcd(frob_power_mod(f, n / l) - (x % f), f);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace drlab
