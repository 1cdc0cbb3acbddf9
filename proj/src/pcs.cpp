#include "valx/pcs.hpp"

#include <climits>
#include <random>

namespace valx {

Int GapExpr::eval(const Int& i) const {
    switch (kind) {
    case Kind::Affine:
        return a * i + b;
    case Kind::PowerOfI: {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), i.get_mpz_t(), k.get_ui());
        return r;
    }
    case Kind::ExpBase: {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), k.get_mpz_t(), i.get_ui());
        return r;
    }
    }
    throw_domain("NotPseudoCauchy", "unknown gap expression");
}

std::string GapExpr::to_string() const {
    switch (kind) {
    case Kind::Affine: {
        std::string s;
        if (a != 1) s += a.get_str() + "*";
        s += "i";
        if (b > 0) s += "+" + b.get_str();
        if (b < 0) s += b.get_str();
        return s;
    }
    case Kind::PowerOfI:
        return "i^" + k.get_str();
    case Kind::ExpBase:
        return k.get_str() + "^i";
    }
    throw_domain("NotPseudoCauchy", "unknown gap expression");
}

std::shared_ptr<const PcsGenerator> PcsGenerator::artin_schreier() {
    auto g = std::shared_ptr<PcsGenerator>(new PcsGenerator());
    g->field_ = ValuedField{FieldKind::FpRationalFunctions, 2};
    g->kind_ = PcsKind::ArtinSchreier;
    g->gap_ = GapExpr::exp_base(Int(2));
    g->declared_limitless_ = true;
    g->declared_cofinal_ = true;
    return g;
}

std::shared_ptr<const PcsGenerator> PcsGenerator::power_gap(const ValuedField& F, GapExpr e) {
    auto g = std::shared_ptr<PcsGenerator>(new PcsGenerator());
    g->field_ = F;
    g->kind_ = PcsKind::PowerGap;
    g->gap_ = e;
    g->declared_limitless_ = true;
    g->declared_cofinal_ = true;
    return g;
}

std::shared_ptr<const PcsGenerator> PcsGenerator::explicit_terms(const ValuedField& F,
                                                                 std::vector<FieldElement> terms,
                                                                 bool declared_limitless) {
    auto g = std::shared_ptr<PcsGenerator>(new PcsGenerator());
    g->field_ = F;
    g->kind_ = PcsKind::Explicit;
    g->explicit_ = std::move(terms);
    g->declared_limitless_ = declared_limitless;
    g->declared_cofinal_ = false;
    return g;
}

long PcsGenerator::max_term_index() const {
    if (kind_ == PcsKind::Explicit) return static_cast<long>(explicit_.size()) - 1;
    return LONG_MAX;
}

FieldElement PcsGenerator::build_term(long nu) const {
    switch (kind_) {
    case PcsKind::Explicit:
        if (nu < 0 || nu >= static_cast<long>(explicit_.size()))
            throw_domain("BudgetExhausted",
                         "explicit sequence has no term at index " + std::to_string(nu));
        return explicit_[static_cast<size_t>(nu)];
    case PcsKind::ArtinSchreier:
    case PcsKind::PowerGap: {
        // c_nu = c_{nu-1} + u^e(nu-1); terms_ already holds c_0..c_{nu-1}
        if (nu == 0) return f_zero(field_);
        FieldElement prev = terms_[static_cast<size_t>(nu - 1)];
        return add(field_, prev, element_of_value(field_, gap_.eval(Int(nu - 1))));
    }
    }
    throw_domain("NotPseudoCauchy", "unknown generator kind");
}

void PcsGenerator::ensure_prefix(long n) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<long>(gammas_.size()) >= n && static_cast<long>(terms_.size()) > n) return;
    long old = static_cast<long>(gammas_.size());
    while (static_cast<long>(terms_.size()) <= n) {
        long nu = static_cast<long>(terms_.size());
        if (kind_ == PcsKind::Explicit && nu > max_term_index()) break;
        terms_.push_back(build_term(nu));
    }
    long have = static_cast<long>(terms_.size());
    if (have < n + 1) {
        if (kind_ == PcsKind::Explicit)
            throw_domain("BudgetExhausted", "explicit sequence too short for prefix length " +
                                                std::to_string(n));
        throw_domain("BudgetExhausted", "cannot extend prefix");
    }
    while (static_cast<long>(gammas_.size()) < n) {
        long nu = static_cast<long>(gammas_.size());
        GroupValue g = value(field_, sub(field_, terms_[static_cast<size_t>(nu + 1)],
                                         terms_[static_cast<size_t>(nu)]));
        if (g.infinite)
            throw_domain("NotPseudoCauchy", "repeated term at indices " + std::to_string(nu) +
                                                "," + std::to_string(nu + 1));
        Int gi = g.coords[0].get_num();
        if (nu > 0 && gi <= gammas_[static_cast<size_t>(nu - 1)])
            throw_domain("NotPseudoCauchy",
                         "gamma not strictly increasing at indices " + std::to_string(nu - 1) +
                             "," + std::to_string(nu));
        gammas_.push_back(gi);
    }
    // spot-check v(c_nu - c_mu) = gamma_mu on random pairs of the prefix
    (void)old;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<unsigned long long>(n));
    long checks = std::min<long>(8, n);
    for (long i = 0; i < checks; ++i) {
        std::uniform_int_distribution<long> dmu(0, n - 1);
        long mu = dmu(rng);
        std::uniform_int_distribution<long> dnu(mu + 1, n);
        long nu = dnu(rng);
        GroupValue g = value(field_, sub(field_, terms_[static_cast<size_t>(nu)],
                                         terms_[static_cast<size_t>(mu)]));
        if (g.infinite || g.coords[0].get_num() != gammas_[static_cast<size_t>(mu)])
            throw_domain("NotPseudoCauchy", "law violated between indices " + std::to_string(mu) +
                                                "," + std::to_string(nu));
    }
}

FieldElement PcsGenerator::term(long nu) const {
    if (nu < 0) throw_domain("BudgetExhausted", "negative sequence index");
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (nu < static_cast<long>(terms_.size())) return terms_[static_cast<size_t>(nu)];
    }
    if (kind_ == PcsKind::Explicit) {
        if (nu > max_term_index())
            throw_domain("BudgetExhausted",
                         "explicit sequence has no term at index " + std::to_string(nu));
        return explicit_[static_cast<size_t>(nu)];
    }
    ensure_prefix(nu); // fills terms_ through nu and validates
    std::lock_guard<std::mutex> lock(mu_);
    return terms_[static_cast<size_t>(nu)];
}

std::vector<GroupValue> PcsGenerator::gamma_prefix(long n) const {
    if (n < 0) n = 0;
    ensure_prefix(n);
    std::vector<GroupValue> out;
    out.reserve(static_cast<size_t>(n));
    std::lock_guard<std::mutex> lock(mu_);
    for (long i = 0; i < n; ++i) out.push_back(gv_int(gammas_[static_cast<size_t>(i)]));
    return out;
}

Int PcsGenerator::gamma_int(long nu) const {
    ensure_prefix(nu + 1);
    std::lock_guard<std::mutex> lock(mu_);
    return gammas_[static_cast<size_t>(nu)];
}

long PcsGenerator::index_of_radius(const Int& gamma, long budget) const {
    for (long nu = 0;; ++nu) {
        if (nu > budget)
            throw_domain("BudgetExhausted", "radius " + gamma.get_str() +
                                                " not reached within budget " +
                                                std::to_string(budget));
        if (kind_ == PcsKind::Explicit && nu > max_term_index() - 1)
            throw_domain("BudgetExhausted",
                         "explicit sequence exhausted before radius " + gamma.get_str());
        if (gamma_int(nu) >= gamma) return nu;
    }
}

std::string PcsGenerator::spec_string() const {
    switch (kind_) {
    case PcsKind::ArtinSchreier:
        return "pcs:artin_schreier";
    case PcsKind::PowerGap:
        return "pcs:powergap:e=" + gap_.to_string();
    case PcsKind::Explicit:
        return "pcs:explicit[" + std::to_string(explicit_.size()) + "]";
    }
    throw_domain("NotPseudoCauchy", "unknown generator kind");
}

bool PcsGenerator::same_presentation(const PcsGenerator& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_ || !(field_ == other.field_)) return false;
    switch (kind_) {
    case PcsKind::ArtinSchreier:
        return true;
    case PcsKind::PowerGap:
        return gap_.kind == other.gap_.kind && gap_.a == other.gap_.a && gap_.b == other.gap_.b &&
               gap_.k == other.gap_.k;
    case PcsKind::Explicit:
        if (explicit_.size() != other.explicit_.size()) return false;
        for (size_t i = 0; i < explicit_.size(); ++i)
            if (!f_eq(explicit_[i], other.explicit_[i])) return false;
        return true;
    }
    return false;
}

bool is_limit_prefix(const Pcs& g, const FieldElement& a, long n) {
    g->gamma_prefix(n); // validates
    for (long nu = 0; nu < n; ++nu) {
        GroupValue d = value(g->field(), sub(g->field(), a, g->term(nu)));
        if (gv_less(d, gv_int(g->gamma_int(nu)))) return false;
    }
    return true;
}

} // namespace valx
