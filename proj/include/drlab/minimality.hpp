#pragma once

#include <map>
#include <optional>
#include <vector>

#include "drlab/drinfeld.hpp"

namespace drlab {

// Finitely supported divisor on the finite places, exact rational coefficients
// (each coefficient already includes its deg(v) factor).
class DiscDivisor {
public:
    DiscDivisor() = default;

    void set(const Place& v, const Rat& c) {
        if (v.is_infinity()) throw domain_error("discriminant divisors live on finite places");
        if (c == 0)
            coeffs_.erase(v);
        else
            coeffs_[v] = c;
    }
    Rat coeff(const Place& v) const {
        auto it = coeffs_.find(v);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    const std::map<Place, Rat>& terms() const { return coeffs_; }
    Rat degree() const {
        Rat d = 0;
        for (const auto& [v, c] : coeffs_) d += c;
        return d;
    }
    bool operator==(const DiscDivisor& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const DiscDivisor& o) const { return !(*this == o); }

private:
    std::map<Place, Rat> coeffs_;
};

struct LocalMinDisc {
    Rat value;          // D_{phi,v}
    std::int64_t kstar; // optimal uniformizer exponent: conjugation by pi^{k*} is integral-minimal
};

// D_{phi,v} and the optimal k*: k* = ceil(max_j -v(a_j)/(q^j - 1)),
// D = (v(a_r) + k*(q^r - 1)) deg(v) / (q^r - 1).
LocalMinDisc local_min_disc(const DrinfeldModule& m, const Place& v);

// lcm{q^j - 1 : 1 <= j <= r}
Int d_constant(std::int64_t q, std::int64_t r);

struct GlobalDivisors {
    DiscDivisor disc;         // Delta: c_v(phi) at each finite place of bad valuation
    DiscDivisor min_disc;     // script-D: local minimal discriminants
    DiscDivisor weierstrass;  // a: Delta - script-D, coefficients -k*_v deg(v)
};

// Requires an integral model (all a_j integral at every finite place).
GlobalDivisors global_divisors(const DrinfeldModule& m);

struct MinimalityCertificate {
    std::map<Place, std::int64_t> kstar;  // per-place optimal exponents of the input
    RF beta;                              // scaling element, product of P^{k*_P}
    DrinfeldModule model;                 // = conjugate(input, beta)
};

// Global minimal model: conjugate by beta = prod P^{k*_P}.  Over F_q(T) the
// class group is trivial, so this always exists and the output has k* = 0 at
// every finite place.
std::pair<DrinfeldModule, MinimalityCertificate> minimal_global_model(const DrinfeldModule& m);

struct LowerNorthcottReport {
    bool conclusive;
    Rat h_phi_best;      // least h(phi) over the scanned integral models
    Rat bound;           // 2 max{h(j_phi), deg D} + g + [L:K] - 1, with g = 0, [L:K] = 1
    Rat slack;           // bound - h_phi_best (conclusive implies slack >= 0)
    DrinfeldModule best; // the achieving model
};

// Scan conjugations beta of bounded height for an integral model witnessing
// h(phi) <= 2 max{h(j_phi), deg D_{phi/L}}.  Bound exhaustion is reported as
// inconclusive, never as failure.
LowerNorthcottReport check_lowernorthcott(const DrinfeldModule& m, std::int64_t beta_height_bound = 4);

}  // namespace drlab
