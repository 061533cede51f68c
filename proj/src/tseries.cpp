#include "ncfgl/tseries.hpp"

#include <nlohmann/json.hpp>

#include "ncfgl/errors.hpp"

namespace ncfgl {

TSeries::TSeries(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 0 || order < 0) throw BadInput("TSeries: bad dimensions");
}

TSeries TSeries::unit(int nvars, int order) {
    TSeries s(nvars, order);
    s.add_term(ExpVec(nvars, 0), FreePoly::one());
    return s;
}

TSeries TSeries::monomial(int nvars, int order, ExpVec e, FreePoly c) {
    TSeries s(nvars, order);
    s.add_term(e, c);
    return s;
}

bool TSeries::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

bool TSeries::operator==(const TSeries& o) const {
    return nvars_ == o.nvars_ && order_ == o.order_ && terms_ == o.terms_;
}

FreePoly TSeries::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FreePoly{} : it->second;
}

void TSeries::add_term(const ExpVec& e, const FreePoly& c) {
    if (static_cast<int>(e.size()) != nvars_) throw BadInput("TSeries::add_term: wrong arity");
    if (c.is_zero()) return;
    if (total_degree(e) > order_) return;
    for (int x : e)
        if (x < -order_) throw BadInput("TSeries: exponent below -order");
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TSeries TSeries::operator+(const TSeries& o) const {
    if (nvars_ != o.nvars_) throw BadInput("TSeries: arity mismatch");
    TSeries out(nvars_, std::min(order_, o.order_));
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

TSeries TSeries::operator-(const TSeries& o) const { return *this + (-o); }

TSeries TSeries::operator-() const {
    TSeries out(nvars_, order_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

TSeries TSeries::operator*(const TSeries& o) const {
    if (nvars_ != o.nvars_) throw BadInput("TSeries: arity mismatch");
    TSeries out(nvars_, std::min(order_, o.order_));
    ExpVec e(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            int d = 0;
            for (int v = 0; v < nvars_; ++v) {
                e[v] = e1[v] + e2[v];
                d += e[v];
            }
            if (d > out.order_) continue;
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

TSeries TSeries::left_mul(const FreePoly& c) const {
    TSeries out(nvars_, order_);
    for (const auto& [e, t] : terms_) out.add_term(e, c * t);
    return out;
}

TSeries TSeries::right_mul(const FreePoly& c) const {
    TSeries out(nvars_, order_);
    for (const auto& [e, t] : terms_) out.add_term(e, t * c);
    return out;
}

TSeries TSeries::operator*(const Int& s) const {
    TSeries out(nvars_, order_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

TSeries TSeries::truncated(int order) const {
    TSeries out(nvars_, std::min(order, order_));
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= out.order_) out.terms_.emplace(e, c);
    return out;
}

TSeries TSeries::truncate_total_grade(int bound) const {
    TSeries out(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        FreePoly kept = c.truncate_weight(bound - total_degree(e));
        if (!kept.is_zero()) out.terms_.emplace(e, std::move(kept));
    }
    return out;
}

TSeries TSeries::invert(int var) const {
    if (var < 0 || var >= nvars_) throw BadInput("invert: bad variable");
    // collect univariate coefficients a_i, require a_1 = 1, a_i = 0 for i < 1
    std::vector<FreePoly> a(order_ + 1);
    for (const auto& [e, c] : terms_) {
        for (int v = 0; v < nvars_; ++v)
            if (v != var && e[v] != 0) throw NotInvertible("invert: series is not univariate in the chosen variable");
        int i = e[var];
        if (i < 1) throw NotInvertible("invert: lowest term is not T^1");
        if (i <= order_) a[i] = c;
    }
    if (a.size() < 2 || a[1] != FreePoly::one())
        throw NotInvertible("invert: leading coefficient is not 1");
    // r = sum_{m >= -1} c_m T^m with s*r = 1:  c_{-1} = 1,
    // c_{n-1} = -sum_{i=2}^{n+1} a_i c_{n-i}  (n >= 1)
    std::vector<FreePoly> c(order_ + 2);  // c[m+1] stores c_m, m from -1
    c[0] = FreePoly::one();
    for (int n = 1; n <= order_ + 1; ++n) {
        FreePoly acc;
        for (int i = 2; i <= n + 1 && i <= order_; ++i) acc += a[i] * c[n - i + 1];
        c[n] = -acc;
    }
    TSeries out(nvars_, order_);
    for (int m = -1; m <= order_; ++m) {
        if (c[m + 1].is_zero()) continue;
        ExpVec e(nvars_, 0);
        e[var] = m;
        out.add_term(e, c[m + 1]);
    }
    return out;
}

TSeries TSeries::substitute_sum(int k) const {
    if (nvars_ != 1) throw BadInput("substitute_sum: input must be univariate");
    std::vector<std::vector<int>> images(1, std::vector<int>(k, 1));
    return apply_linear(k, images);
}

namespace {
// expand (sum_a coef[a] T_a)^e into out as integer-coefficient monomials
void linear_power(const std::vector<int>& coef, int e, int order,
                  std::map<ExpVec, Int, GradedLexLess>& out) {
    int n = static_cast<int>(coef.size());
    ExpVec exp(n, 0);
    std::vector<int> parts;
    // recursive multinomial expansion over variables with nonzero coefficient
    struct Rec {
        const std::vector<int>& coef;
        int n, order;
        std::map<ExpVec, Int, GradedLexLess>& out;
        ExpVec& exp;
        std::vector<int>& parts;
        void go(int var, int rest) {
            if (var == n - 1) {
                if (coef[var] == 0 && rest > 0) return;
                exp[var] = rest;
                if (rest) parts.push_back(rest);
                Int scale = multinomial(parts);
                for (int v = 0; v < n; ++v) {
                    Int base = coef[v];
                    for (int t = 0; t < exp[v]; ++t) scale *= base;
                }
                if (scale != 0) out[exp] += scale;
                if (rest) parts.pop_back();
                exp[var] = 0;
                return;
            }
            int max_here = coef[var] == 0 ? 0 : rest;
            for (int take = 0; take <= max_here; ++take) {
                exp[var] = take;
                if (take) parts.push_back(take);
                go(var + 1, rest - take);
                if (take) parts.pop_back();
                exp[var] = 0;
            }
        }
    } rec{coef, n, order, out, exp, parts};
    if (e > order) return;
    rec.go(0, e);
}
}  // namespace

TSeries TSeries::apply_linear(int new_nvars, const std::vector<std::vector<int>>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw BadInput("apply_linear: wrong image count");
    for (const auto& im : images)
        if (static_cast<int>(im.size()) != new_nvars) throw BadInput("apply_linear: wrong image arity");
    if (has_negative_exponents()) throw BadInput("apply_linear: Laurent input unsupported");

    TSeries out(new_nvars, order_);
    // cache per (var, exponent): expansion of (image_var)^e
    std::map<std::pair<int, int>, std::map<ExpVec, Int, GradedLexLess>> cache;
    for (const auto& [e, c] : terms_) {
        // product over vars of cached expansions, accumulated iteratively
        std::map<ExpVec, Int, GradedLexLess> acc;
        acc[ExpVec(new_nvars, 0)] = 1;
        for (int v = 0; v < nvars_ && !acc.empty(); ++v) {
            if (e[v] == 0) continue;
            auto key = std::make_pair(v, e[v]);
            auto it = cache.find(key);
            if (it == cache.end()) {
                std::map<ExpVec, Int, GradedLexLess> pw;
                linear_power(images[v], e[v], order_, pw);
                it = cache.emplace(key, std::move(pw)).first;
            }
            std::map<ExpVec, Int, GradedLexLess> next;
            for (const auto& [e1, c1] : acc) {
                for (const auto& [e2, c2] : it->second) {
                    ExpVec sum(new_nvars);
                    int d = 0;
                    for (int a = 0; a < new_nvars; ++a) {
                        sum[a] = e1[a] + e2[a];
                        d += sum[a];
                    }
                    if (d > order_) continue;
                    next[sum] += c1 * c2;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [ne, scale] : acc) {
            if (scale == 0) continue;
            out.add_term(ne, c * scale);
        }
    }
    return out;
}

TSeries TSeries::swap_vars(int i, int j) const {
    TSeries out(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        std::swap(ne[i], ne[j]);
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

TSeries TSeries::set_var_zero(int var) const {
    TSeries out(nvars_, order_);
    for (const auto& [e, c] : terms_)
        if (e[var] == 0) out.terms_.emplace(e, c);
    return out;
}

std::string TSeries::to_json() const {
    nlohmann::json j;
    j["vars"] = nvars_;
    j["order"] = order_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json jt;
        jt["e"] = e;
        jt["coeff"] = nlohmann::json::parse(c.to_json());
        j["terms"].push_back(jt);
    }
    return j.dump();
}

TSeries orientation_series(int var, int nvars, int order) {
    if (var < 0 || var >= nvars) throw BadInput("orientation_series: bad variable");
    TSeries s(nvars, order);
    ExpVec e(nvars, 0);
    for (int m = 1; m <= order; ++m) {
        e[var] = m;
        s.add_term(e, m == 1 ? FreePoly::one() : FreePoly::gen(m - 1));
    }
    return s;
}

}  // namespace ncfgl
