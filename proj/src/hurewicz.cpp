#include "ncfgl/hurewicz.hpp"

#include <deque>

#include <nlohmann/json.hpp>

#include "ncfgl/errors.hpp"

namespace ncfgl {

const char* convention_name(Convention c) {
    return c == Convention::Direct ? "direct" : "paper-figures";
}

std::optional<Convention> convention_from_name(const std::string& name) {
    if (name == "direct" || name == "A") return Convention::Direct;
    if (name == "paper-figures" || name == "B") return Convention::PaperFigures;
    return std::nullopt;
}

XPowers::XPowers(int order) : order_(order) {
    c_.resize(order + 1);
    c_[0].resize(order + 1);
    if (order >= 0) c_[0][0] = FreePoly::one();
    for (int k = 1; k <= order; ++k) {
        c_[k].resize(order + 1);
        // X^k = X^{k-1} * X, X = sum_{j>=0} Z_j T^{1+j} with Z_0 = 1
        for (int m = k; m <= order; ++m) {
            FreePoly acc;
            for (int j = 0; j + 1 <= m; ++j) {
                const FreePoly& prev = c_[k - 1][m - 1 - j];
                if (prev.is_zero()) continue;
                acc += j == 0 ? prev : prev * FreePoly::gen(j);
            }
            c_[k][m] = std::move(acc);
        }
    }
}

const FreePoly& XPowers::coeff(int k, int m) const {
    static const FreePoly zero;
    if (k < 0 || m < 0) throw BadInput("XPowers::coeff: negative index");
    if (m > order_) throw PrecisionExhausted("XPowers: coefficient beyond order " + std::to_string(order_));
    if (k > m) return zero;
    return c_[k][m];
}

XExpansion::XExpansion(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 0 || order < 0) throw BadInput("XExpansion: bad dimensions");
}

XExpansion XExpansion::monomial(int nvars, int order, ExpVec e, FreePoly c) {
    XExpansion x(nvars, order);
    x.add_term(e, c);
    return x;
}

XExpansion XExpansion::var(int nvars, int order, int j) {
    ExpVec e(nvars, 0);
    e.at(j) = 1;
    return monomial(nvars, order, e, FreePoly::one());
}

bool XExpansion::operator==(const XExpansion& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

FreePoly XExpansion::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FreePoly{} : it->second;
}

void XExpansion::add_term(const ExpVec& e, const FreePoly& c) {
    if (static_cast<int>(e.size()) != nvars_) throw BadInput("XExpansion::add_term: wrong arity");
    if (c.is_zero()) return;
    for (int x : e)
        if (x < 0) throw BadInput("XExpansion: negative exponent");
    if (total_degree(e) > order_) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XExpansion XExpansion::operator+(const XExpansion& o) const {
    if (nvars_ != o.nvars_) throw BadInput("XExpansion: arity mismatch");
    XExpansion out(nvars_, std::min(order_, o.order_));
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

XExpansion XExpansion::operator-(const XExpansion& o) const { return *this + (-o); }

XExpansion XExpansion::operator-() const {
    XExpansion out(nvars_, order_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

XExpansion XExpansion::left_mul(const FreePoly& c) const {
    XExpansion out(nvars_, order_);
    for (const auto& [e, t] : terms_) out.add_term(e, c * t);
    return out;
}

XExpansion XExpansion::operator*(const Int& s) const {
    XExpansion out(nvars_, order_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

XExpansion XExpansion::truncated(int order) const {
    XExpansion out(nvars_, std::min(order_, order));
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= out.order_) out.terms_.emplace(e, c);
    return out;
}

XExpansion XExpansion::degree_component(int d) const {
    XExpansion out(nvars_, order_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

std::string XExpansion::to_json() const {
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

namespace {

// T-series of the ordered basis monomial x_1^{e_1}...x_n^{e_n}
void accumulate_basis_monomial(TSeries& out, const ExpVec& e, const FreePoly& lead,
                               const XPowers& xp) {
    const int nvars = out.nvars();
    const int order = out.order();
    ExpVec m(nvars, 0);
    std::function<void(int, int, const FreePoly&)> rec = [&](int v, int used, const FreePoly& c) {
        if (v == nvars) {
            out.add_term(m, c);
            return;
        }
        if (e[v] == 0) {
            m[v] = 0;
            rec(v + 1, used, c);
            return;
        }
        for (int mv = e[v]; used + mv <= order; ++mv) {
            const FreePoly& part = xp.coeff(e[v], mv);
            if (part.is_zero()) continue;
            m[v] = mv;
            rec(v + 1, used + mv, c * part);
            m[v] = 0;
        }
    };
    rec(0, 0, lead);
}

}  // namespace

TSeries realize(const XExpansion& e, const XPowers& xp) {
    if (e.order() > xp.order()) throw PrecisionExhausted("realize: XPowers order too small");
    TSeries out(e.nvars(), e.order());
    for (const auto& [exp, c] : e.terms()) accumulate_basis_monomial(out, exp, c, xp);
    return out;
}

XExpansion extract_left(const TSeries& s, const XPowers& xp) {
    return extract_left_capped(s, xp, s.order());
}

XExpansion extract_left_capped(const TSeries& s, const XPowers& xp, int max_degree) {
    if (s.has_negative_exponents())
        throw NotInSpan("extract_left: Laurent series has no ordered-monomial expansion");
    if (s.order() > xp.order()) throw PrecisionExhausted("extract_left: XPowers order too small");
    XExpansion out(s.nvars(), s.order());
    TSeries residual = s;
    // The leading T-monomial of realize(x^E) is T^E with unit coefficient, so
    // peeling in graded-lex order terminates with a zero residual.
    while (!residual.is_zero()) {
        auto it = residual.terms().begin();
        ExpVec e = it->first;
        if (total_degree(e) > max_degree) break;
        FreePoly c = it->second;
        out.add_term(e, c);
        TSeries basis(s.nvars(), s.order());
        accumulate_basis_monomial(basis, e, c, xp);
        residual = residual - basis;
    }
    return out;
}

XExpansion xe_mul(const XExpansion& a, const XExpansion& b, const XPowers& xp) {
    return extract_left(realize(a, xp) * realize(b, xp), xp);
}

std::vector<FreePoly> reversion(int order) {
    if (order < 1) throw BadInput("reversion: order must be >= 1");
    XPowers xp(order);
    std::vector<FreePoly> r(order);
    r[0] = FreePoly::one();
    // coefficient of T^{1+n} in sum_k r_k X^{1+k} must vanish for n >= 1
    for (int n = 1; n < order; ++n) {
        FreePoly acc;
        for (int k = 0; k < n; ++k) acc += r[k] * xp.coeff(1 + k, 1 + n);
        r[n] = -acc;
    }
    return r;
}

namespace {

struct RewriteTerm {
    FreePoly lead;                      // scalar prefix
    std::vector<RewriteFactor> items;   // remaining factors
};

int var_count(const RewriteTerm& t) {
    int n = 0;
    for (const auto& f : t.items)
        if (f.var >= 0) ++n;
    return n;
}

}  // namespace

XExpansion normal_order_rewrite(const std::vector<RewriteFactor>& factors, const RewriteRules& rules,
                                int nvars, int order) {
    if (order > rules.order)
        throw PrecisionExhausted("normal_order_rewrite: rules order " + std::to_string(rules.order) +
                                 " below requested order " + std::to_string(order));
    XExpansion out(nvars, order);
    std::deque<RewriteTerm> queue;
    queue.push_back(RewriteTerm{FreePoly::one(), factors});

    while (!queue.empty()) {
        RewriteTerm t = std::move(queue.front());
        queue.pop_front();
        if (t.lead.is_zero()) continue;
        if (var_count(t) > order) continue;

        // fold leading scalars into the prefix, drop unit scalars, find the
        // leftmost violation: [var][scalar] or [var_l][var_k] with l > k
        std::vector<RewriteFactor> items;
        items.reserve(t.items.size());
        for (auto& f : t.items) {
            if (f.var < 0) {
                if (items.empty()) {
                    t.lead *= f.scalar;
                    continue;
                }
                if (items.back().var < 0) {
                    items.back().scalar *= f.scalar;
                    continue;
                }
            }
            items.push_back(std::move(f));
        }
        if (t.lead.is_zero()) continue;

        int viol = -1;
        bool scalar_viol = false;
        for (size_t i = 0; i + 1 < items.size(); ++i) {
            if (items[i].var >= 0 && items[i + 1].var < 0) {
                viol = static_cast<int>(i);
                scalar_viol = true;
                break;
            }
            if (items[i].var >= 0 && items[i + 1].var >= 0 && items[i].var > items[i + 1].var) {
                viol = static_cast<int>(i);
                scalar_viol = false;
                break;
            }
        }

        if (viol < 0) {
            // ordered monomial: weakly ascending vars, no interior scalars
            ExpVec e(nvars, 0);
            for (const auto& f : items) e.at(f.var) += 1;
            out.add_term(e, t.lead);
            continue;
        }

        const int budget = order - var_count(t);
        if (scalar_viol) {
            // x_j r -> sum_k phi_k(r) x_j^{1+k}
            const int j = items[viol].var;
            const FreePoly r = items[viol + 1].scalar;
            for (int k = 0; k <= budget; ++k) {
                FreePoly pk = rules.phi(k, r);
                if (pk.is_zero()) continue;
                RewriteTerm nt;
                nt.lead = t.lead;
                nt.items.assign(items.begin(), items.begin() + viol);
                nt.items.push_back(RewriteFactor::coefficient(std::move(pk)));
                for (int rep = 0; rep < 1 + k; ++rep) nt.items.push_back(RewriteFactor::variable(j));
                nt.items.insert(nt.items.end(), items.begin() + viol + 2, items.end());
                queue.push_back(std::move(nt));
            }
        } else {
            // x_l x_k -> sum U(p,q) x_k^{1+p} x_l^{1+q}  (l > k)
            const int l = items[viol].var, k = items[viol + 1].var;
            for (int p = 0; p <= budget; ++p) {
                for (int q = 0; p + q <= budget; ++q) {
                    FreePoly u = rules.upsilon_direct(p, q);
                    if (u.is_zero()) continue;
                    RewriteTerm nt;
                    nt.lead = t.lead;
                    nt.items.assign(items.begin(), items.begin() + viol);
                    if (!(p == 0 && q == 0))
                        nt.items.push_back(RewriteFactor::coefficient(std::move(u)));
                    for (int rep = 0; rep < 1 + p; ++rep) nt.items.push_back(RewriteFactor::variable(k));
                    for (int rep = 0; rep < 1 + q; ++rep) nt.items.push_back(RewriteFactor::variable(l));
                    nt.items.insert(nt.items.end(), items.begin() + viol + 2, items.end());
                    queue.push_back(std::move(nt));
                }
            }
        }
    }
    return out;
}

}  // namespace ncfgl
