#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "valx/poly.hpp"
#include "valx/valued_field.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Omega-indexed pseudo Cauchy sequences, presented by deterministic
// index -> element maps. Every prefix is validated against the law
// v(c_tau - c_sigma) > v(c_sigma - c_rho) for rho < sigma < tau before use.
// ---------------------------------------------------------------------------

/// Strictly increasing exponent gap e : N -> N for the PowerGap builtin.
struct GapExpr {
    enum class Kind { Affine, PowerOfI, ExpBase };
    Kind kind = Kind::Affine;
    Int a = 1, b = 0; // Affine: a*i + b (a >= 1)
    Int k = 2;        // PowerOfI: i^k (k >= 1); ExpBase: k^i (k >= 2)

    Int eval(const Int& i) const;
    std::string to_string() const;

    static GapExpr affine(const Int& a, const Int& b) { return GapExpr{Kind::Affine, a, b, 2}; }
    static GapExpr power_of_i(const Int& k) { return GapExpr{Kind::PowerOfI, 1, 0, k}; }
    static GapExpr exp_base(const Int& k) { return GapExpr{Kind::ExpBase, 1, 0, k}; }
};

enum class PcsKind { ArtinSchreier, PowerGap, Explicit };

class PcsGenerator {
public:
    /// c_nu = sum_{i<nu} t^(2^i) over F_2(t).
    static std::shared_ptr<const PcsGenerator> artin_schreier();
    /// c_nu = sum_{i<nu} u^e(i), u the uniformizer of F.
    static std::shared_ptr<const PcsGenerator> power_gap(const ValuedField& F, GapExpr e);
    static std::shared_ptr<const PcsGenerator> explicit_terms(const ValuedField& F,
                                                              std::vector<FieldElement> terms,
                                                              bool declared_limitless = false);

    const ValuedField& field() const { return field_; }
    PcsKind kind() const { return kind_; }
    bool declared_limitless() const { return declared_limitless_; }
    bool declared_cofinal_in_vk() const { return declared_cofinal_; }

    /// Largest index nu for which c_nu is defined (LONG_MAX for builtins).
    long max_term_index() const;

    /// Pure map nu -> c_nu; throws BudgetExhausted past an explicit list's end.
    FieldElement term(long nu) const;

    /// (gamma_0 .. gamma_{n-1}) with gamma_nu = v(c_{nu+1} - c_nu); validates
    /// strict increase and spot-checks v(c_nu - c_mu) = gamma_mu on random
    /// triples of the prefix. NotPseudoCauchy carries the offending indices.
    std::vector<GroupValue> gamma_prefix(long n) const;

    /// gamma_nu as a plain integer (value groups here are Z).
    Int gamma_int(long nu) const;

    /// Smallest nu with gamma_nu >= gamma; extends the validated prefix but
    /// gives up past `budget` indices (BudgetExhausted).
    long index_of_radius(const Int& gamma, long budget) const;

    std::string spec_string() const;

    /// Identity of the presented sequence (same builtin + field + parameters).
    bool same_presentation(const PcsGenerator& other) const;

private:
    PcsGenerator() = default;

    void ensure_prefix(long n) const; // terms_ up to n, gammas_ up to n-1
    FieldElement build_term(long nu) const;

    ValuedField field_;
    PcsKind kind_ = PcsKind::Explicit;
    GapExpr gap_;
    std::vector<FieldElement> explicit_;
    bool declared_limitless_ = false;
    bool declared_cofinal_ = false;

    mutable std::mutex mu_;
    mutable std::vector<FieldElement> terms_;
    mutable std::vector<Int> gammas_;
};

using Pcs = std::shared_ptr<const PcsGenerator>;

/// v(a - c_nu) >= gamma_nu for all nu < n.
bool is_limit_prefix(const Pcs& g, const FieldElement& a, long n);

} // namespace valx
