#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "drlab/errors.hpp"
#include "drlab/rat.hpp"

namespace drlab {

// Description of F_q, q = p^e, as F_p[x]/(modulus).  For e = 1 the modulus is
// the canonical x and is never used in arithmetic.
class FqConfig {
public:
    // modulus: e+1 coefficients over F_p, lowest first, monic, irreducible.
    // Empty modulus selects the canonical one (only allowed for e = 1).
    static std::shared_ptr<const FqConfig> make(std::uint32_t p, std::uint32_t e,
                                                std::vector<std::uint32_t> modulus = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::int64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_as(const FqConfig& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    FqConfig() = default;
    std::uint32_t p_ = 0, e_ = 0;
    std::int64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
};

using FqConfigPtr = std::shared_ptr<const FqConfig>;

// Element of F_q: e coefficients over F_p relative to the config's modulus.
class FqElem {
public:
    FqElem() = default;  // unusable sentinel; real elements come from a config
    FqElem(FqConfigPtr cfg, std::vector<std::uint32_t> coeffs);

    static FqElem zero(const FqConfigPtr& cfg);
    static FqElem one(const FqConfigPtr& cfg);
    // Embeds n mod p into the prime field.
    static FqElem from_int(const FqConfigPtr& cfg, std::int64_t n);
    // Element with given index in [0, q): base-p digits are the coefficients.
    static FqElem from_index(const FqConfigPtr& cfg, std::int64_t index);

    static FqElem zero_like(const FqElem& x) { return zero(x.config()); }
    static FqElem one_like(const FqElem& x) { return one(x.config()); }

    const FqConfigPtr& config() const { return cfg_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
    std::int64_t index() const;

    bool is_zero() const;
    bool is_one() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator-() const;
    FqElem operator*(const FqElem& o) const;
    FqElem inv() const;
    FqElem operator/(const FqElem& o) const { return *this * o.inv(); }
    FqElem pow(const Int& n) const;
    FqElem frobenius() const { return pow(Int(cfg_->p())); }  // x -> x^p
    // x -> x^{p^{e-1}}, the inverse of frobenius; p-th roots are unique.
    FqElem pth_root() const;

    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

private:
    void check_config(const FqElem& o) const;
    FqConfigPtr cfg_;
    std::vector<std::uint32_t> coeffs_;
};

// pow_q(x, k, q) = x^{q^k}.  For F_q elements this is the identity; the
// overload exists so that polynomial/rational-function q-power maps recurse.
inline FqElem pow_q(const FqElem& x, unsigned /*k*/, std::int64_t /*q*/) { return x; }

bool is_prime_u32(std::uint32_t n);

}  // namespace drlab
