#include "ncfgl/qsym.hpp"

#include "ncfgl/bfk.hpp"
#include "ncfgl/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace ncfgl {

namespace {

std::string comp_name(const Composition& I) {
    std::string s = "m[";
    for (size_t i = 0; i < I.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(I[i]);
    }
    s += ']';
    return s;
}

int comp_weight(const Composition& I) {
    return std::accumulate(I.begin(), I.end(), 0);
}

}  // namespace

QSymElement QSymElement::unit(int order) {
    QSymElement q{order, {}};
    q.terms[{}] = FreePoly::one();
    return q;
}

QSymElement QSymElement::monomial(int order, Composition I, FreePoly c) {
    QSymElement q{order, {}};
    if (!c.is_zero() && comp_weight(I) <= order) q.terms[std::move(I)] = std::move(c);
    return q;
}

FreePoly QSymElement::coeff(const Composition& I) const {
    auto it = terms.find(I);
    return it == terms.end() ? FreePoly{} : it->second;
}

void QSymElement::add_term(Composition I, const FreePoly& c) {
    for (int part : I)
        if (part <= 0) throw BadInput("composition parts must be positive");
    if (c.is_zero() || comp_weight(I) > order) return;
    auto it = terms.find(I);
    if (it == terms.end()) {
        terms.emplace(std::move(I), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

QSymElement QSymElement::operator+(const QSymElement& o) const {
    QSymElement out{std::min(order, o.order), terms};
    for (const auto& [I, c] : o.terms) out.add_term(I, c);
    // re-truncate in case orders differ
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = comp_weight(it->first) > out.order ? out.terms.erase(it) : std::next(it);
    return out;
}

QSymElement QSymElement::operator-(const QSymElement& o) const {
    QSymElement neg{o.order, {}};
    for (const auto& [I, c] : o.terms) neg.terms.emplace(I, c * Int(-1));
    return *this + neg;
}

int QSymElement::max_length() const {
    size_t n = 0;
    for (const auto& [I, c] : terms) n = std::max(n, I.size());
    return static_cast<int>(n);
}

std::string QSymElement::to_text() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_text();
        if (cs == "1")
            os << comp_name(I);
        else
            os << '(' << cs << ")*" << comp_name(I);
    }
    return os.str();
}

std::string QSymElement::to_json() const {
    nlohmann::json j;
    j["order"] = order;
    j["terms"] = nlohmann::json::array();
    for (const auto& [I, c] : terms) {
        nlohmann::json jt;
        jt["I"] = I;
        jt["coeff"] = nlohmann::json::parse(c.to_json());
        j["terms"].push_back(std::move(jt));
    }
    return j.dump();
}

XExpansion m_expansion(const Composition& I, int nvars, int order) {
    if (nvars < 0) throw BadInput("m_expansion: negative variable count");
    XExpansion out(nvars, order);
    int len = static_cast<int>(I.size());
    if (len == 0) {
        out.add_term(ExpVec(nvars, 0), FreePoly::one());
        return out;
    }
    if (len > nvars || comp_weight(I) > order) return out;
    // all increasing placements of I into nvars slots
    std::vector<int> pos(len);
    std::iota(pos.begin(), pos.end(), 0);
    auto emit = [&] {
        ExpVec e(nvars, 0);
        for (int l = 0; l < len; ++l) e[pos[l]] = I[l];
        out.add_term(e, FreePoly::one());
    };
    emit();
    while (true) {
        int i = len - 1;
        while (i >= 0 && pos[i] == nvars - len + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int l = i + 1; l < len; ++l) pos[l] = pos[l - 1] + 1;
        emit();
    }
    return out;
}

QSymElement qsym_from_xexpansion(const XExpansion& xe, int degree_cap) {
    QSymElement out{degree_cap, {}};
    int nvars = xe.nvars();
    std::set<Composition> checked;
    for (const auto& [e, c] : xe.terms()) {
        if (total_degree(e) > degree_cap) continue;
        Composition I;
        for (int v : e)
            if (v != 0) I.push_back(v);
        if (!checked.insert(I).second) continue;
        XExpansion spreads = m_expansion(I, nvars, degree_cap);
        for (const auto& [se, unit] : spreads.terms()) {
            if (!(xe.coeff(se) == c))
                throw NotQuasiSymmetric("coefficient mismatch among spreads of " + comp_name(I));
        }
        out.add_term(I, c);
    }
    return out;
}

// --- theta table ------------------------------------------------------------

ThetaTable theta_table(int order) {
    if (order < 2) throw BadInput("theta_table: order must be at least 2");
    TSeries x = orientation_series(0, 2, order);
    TSeries y = orientation_series(1, 2, order);
    std::vector<TSeries> px{TSeries::unit(2, order)}, py{TSeries::unit(2, order)};
    for (int k = 1; k <= order; ++k) {
        px.push_back(px.back() * x);
        py.push_back(py.back() * y);
    }
    ThetaTable th{order, {}};
    TSeries residual = y * x - x * y;
    while (!residual.is_zero()) {
        const auto& [e, c] = *residual.terms().begin();
        int d = total_degree(e);
        if (d > order) break;
        int p = e[0], q = e[1];
        if (p < 1 || p >= q)
            throw Error("theta_table: leading term x1^" + std::to_string(p) + "*x2^" +
                        std::to_string(q) + " outside the p<q ansatz");
        th.t[{p, q}] = c;
        residual = residual - (px[p] * py[q] - py[p] * px[q]).left_mul(c);
    }
    return th;
}

FreePoly ThetaTable::theta(int p, int q) const {
    if (p < 1 || q < 1 || p + q > order) throw BadInput("theta(p,q): indices out of range");
    if (p == q) return p == 1 ? FreePoly::one() : FreePoly{};
    if (p < q) {
        auto it = t.find({p, q});
        return it == t.end() ? FreePoly{} : it->second;
    }
    auto it = t.find({q, p});
    return it == t.end() ? FreePoly{} : it->second * Int(-1);
}

XExpansion e2(const ThetaTable& th) {
    XExpansion out(2, th.order);
    out.add_term({1, 1}, FreePoly::one());
    for (const auto& [pq, c] : th.t) out.add_term({pq.first, pq.second}, c);
    return out;
}

// --- Vieta frame ------------------------------------------------------------

namespace {

// Re-embed an expansion into a different arity / truncation order.
XExpansion reshape(const XExpansion& a, int nvars, int order) {
    XExpansion out(nvars, order);
    for (const auto& [e, c] : a.terms()) {
        ExpVec ne(nvars, 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (static_cast<int>(i) >= nvars) throw BadInput("reshape: variable out of range");
            ne[i] = e[i];
        }
        out.add_term(ne, c);
    }
    return out;
}

XExpansion xe_mul_capped(const XExpansion& a, const XExpansion& b, const XPowers& xp, int cap) {
    return extract_left_capped(realize(a, xp) * realize(b, xp), xp, cap);
}

// Multiply by x_j^m on the right, valid when no term touches variables >= j.
XExpansion append_power(const XExpansion& a, int j, int m) {
    XExpansion out(a.nvars(), a.order());
    for (const auto& [e, c] : a.terms()) {
        for (size_t i = j; i < e.size(); ++i)
            if (e[i] != 0) throw Error("append_power: term already uses x_j or later");
        ExpVec ne = e;
        ne[j] = m;
        out.add_term(ne, c);
    }
    return out;
}

// Exact division of the degree-D slice `dbar` by `vbar` (monic of degree m in
// x_j, all other terms of lower x_j-degree).  Both live in the commutative
// associated graded; coefficients multiply quotient-side first.
XExpansion divide_monic(const XExpansion& dbar, const XExpansion& vbar, int j, int m) {
    std::map<ExpVec, FreePoly, GradedLexLess> rem(dbar.terms().begin(), dbar.terms().end());
    XExpansion z(dbar.nvars(), dbar.order());
    while (!rem.empty()) {
        auto top = rem.begin();
        for (auto it = rem.begin(); it != rem.end(); ++it)
            if (it->first[j] > top->first[j]) top = it;
        ExpVec e = top->first;
        FreePoly c = top->second;
        if (e[j] < m) throw Error("vieta: commutative division left a nonzero remainder");
        ExpVec eq = e;
        eq[j] -= m;
        z.add_term(eq, c);
        for (const auto& [ev, cv] : vbar.terms()) {
            ExpVec es = eq;
            for (size_t i = 0; i < es.size(); ++i) es[i] += ev[i];
            auto it = rem.find(es);
            FreePoly upd = (it == rem.end() ? FreePoly{} : it->second) - c * cv;
            if (it != rem.end()) rem.erase(it);
            if (!upd.is_zero()) rem.emplace(std::move(es), std::move(upd));
        }
    }
    return z;
}

}  // namespace

VietaFrame vieta(int n_vars, int order) {
    if (n_vars < 1) throw BadInput("vieta: need at least one variable");
    if (order < 1) throw BadInput("vieta: order must be positive");
    VietaFrame fr{n_vars, order, {}, {}};
    fr.y.push_back(reshape(XExpansion::var(n_vars, order, 0), n_vars, order));
    {
        XExpansion one(n_vars, order);
        one.add_term(ExpVec(n_vars, 0), FreePoly::one());
        fr.v.push_back(one);
    }
    for (int k = 2; k <= n_vars; ++k) {
        const int N = 2 * order + k - 2;
        const int cap = order + k - 1;
        XPowers xp(N);
        std::vector<XExpansion> ys;
        for (int i = 0; i < k - 1; ++i) ys.push_back(reshape(fr.y[i], k, N));

        // d_l = (-1)^l sum_{i1<...<il<k} y_{il}...y_{i1}
        std::vector<XExpansion> d;
        {
            XExpansion one(k, N);
            one.add_term(ExpVec(k, 0), FreePoly::one());
            d.push_back(one);
        }
        for (int l = 1; l <= k - 1; ++l) {
            XExpansion dl(k, N);
            std::vector<int> idx(l);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                XExpansion prod = ys[idx[l - 1]];
                for (int t = l - 2; t >= 0; --t) prod = xe_mul_capped(prod, ys[idx[t]], xp, cap);
                dl = dl + prod;
                int i = l - 1;
                while (i >= 0 && idx[i] == k - 1 - l + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int t = i + 1; t < l; ++t) idx[t] = idx[t - 1] + 1;
            }
            if (l % 2) dl = dl * Int(-1);
            d.push_back(dl);
        }

        XExpansion v(k, N);
        for (int l = 0; l <= k - 1; ++l) v = v + append_power(d[l], k - 1, k - 1 - l);
        XExpansion vbar = v.degree_component(k - 1);

        TSeries Sv = realize(v, xp);
        TSeries Sx = realize(XExpansion::var(k, N, k - 1), xp);
        TSeries Sdelta = Sv * Sx - Sx * Sv;
        XExpansion yk = XExpansion::var(k, N, k - 1);
        while (!Sdelta.is_zero()) {
            int D = total_degree(Sdelta.terms().begin()->first);
            if (D > cap) break;
            XExpansion dbar = extract_left_capped(Sdelta, xp, D);
            for (const auto& [e, c] : dbar.terms())
                if (total_degree(e) != D)
                    throw Error("vieta: delta has terms below its leading degree");
            XExpansion z = divide_monic(dbar, vbar, k - 1, k - 1);
            yk = yk + z;
            Sdelta = Sdelta - realize(z, xp) * Sv;
        }
        fr.y.push_back(reshape(yk.truncated(order), n_vars, order));
        fr.v.push_back(reshape(v.truncated(order), n_vars, order));
    }
    return fr;
}

QSymElement chern(int k, int n_vars, int order) {
    if (k < 1) throw BadInput("chern: k must be positive");
    if (n_vars < k) throw BadInput("chern: need at least k variables");
    QSymElement out{order, {}};
    if (order < k) return out;

    VietaFrame fr = vieta(k, std::max(order - k + 1, k));
    const int N = 2 * order - k;
    XPowers xp(N);
    XExpansion P = reshape(fr.y[k - 1], k, N);
    for (int i = k - 2; i >= 0; --i) P = xe_mul_capped(P, reshape(fr.y[i], k, N), xp, order);

    XExpansion total(n_vars, order);
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        for (const auto& [e, c] : P.terms()) {
            if (total_degree(e) > order) continue;
            ExpVec ne(n_vars, 0);
            for (int t = 0; t < k; ++t) ne[idx[t]] = e[t];
            total.add_term(ne, c);
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n_vars - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return qsym_from_xexpansion(total, order);
}

QSymElement cprime(int n, int n_vars, int order) { return chern(n, n_vars, order); }

// --- quasi-symmetric arithmetic ----------------------------------------------

QSymElement qsym_mul(const QSymElement& a, const QSymElement& b, int order, int nvars) {
    QSymElement out{order, {}};
    if (a.terms.empty() || b.terms.empty()) return out;
    int la = a.max_length(), lb = b.max_length();
    int n = nvars > 0 ? nvars : la + lb;
    if (n == 0) {
        out.add_term({}, a.coeff({}) * b.coeff({}));
        return out;
    }
    if (la > n || lb > n) throw BadInput("qsym_mul: not enough variables for the inputs");
    auto gmin = [](const QSymElement& q) {
        int g = INT_MAX;
        for (const auto& [I, c] : q.terms)
            g = std::min(g, static_cast<int>(I.size()) - c.max_weight());
        return g;
    };
    int N = std::max(order, 2 * order - gmin(a) - gmin(b));
    XPowers xp(N);
    auto expand = [&](const QSymElement& q) {
        XExpansion xe(n, N);
        for (const auto& [I, c] : q.terms) xe = xe + m_expansion(I, n, N).left_mul(c);
        return xe;
    };
    XExpansion prod =
        extract_left_capped(realize(expand(a), xp) * realize(expand(b), xp), xp, order);
    return qsym_from_xexpansion(prod, order);
}

QSymElement qsym_scalar(const Composition& I, const FreePoly& r, int order,
                        const FglEngine& engine) {
    QSymElement out{order, {}};
    if (r.is_zero()) return out;
    int len = static_cast<int>(I.size());
    int base = comp_weight(I);
    if (base > order) return out;
    if (len == 0) {
        out.add_term({}, r);
        return out;
    }
    std::vector<int> J(len, 0);
    std::function<void(int, int)> rec = [&](int pos, int budget) {
        if (pos == len) {
            BElement q = BElement::one();
            for (int l = 0; l < len; ++l) q = q * q_poly(I[l], J[l]);
            FreePoly c = act(q, r, engine);
            if (!c.is_zero()) {
                Composition sum(I);
                for (int l = 0; l < len; ++l) sum[l] += J[l];
                out.add_term(sum, c);
            }
            return;
        }
        for (int j = 0; j <= budget; ++j) {
            J[pos] = j;
            rec(pos + 1, budget - j);
        }
        J[pos] = 0;
    };
    rec(0, order - base);
    return out;
}

std::vector<QSymTensorTerm> whitney_coproduct(const QSymElement& a) {
    std::vector<QSymTensorTerm> out;
    for (const auto& [I, c] : a.terms) {
        for (size_t s = 0; s <= I.size(); ++s) {
            QSymTensorTerm t;
            t.left.assign(I.begin(), I.begin() + s);
            t.right.assign(I.begin() + s, I.end());
            t.c = c;
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end(), [](const QSymTensorTerm& x, const QSymTensorTerm& y) {
        GradedLexLess lt;
        if (lt(x.left, y.left)) return true;
        if (lt(y.left, x.left)) return false;
        return lt(x.right, y.right);
    });
    return out;
}

// --- splitting principle ------------------------------------------------------

std::map<std::pair<int, int>, FreePoly> splitting_B(int order) {
    if (order < 0) throw BadInput("splitting_B: negative order");
    const int N = order + 3;
    TSeries x1 = orientation_series(0, 2, N);
    TSeries x2 = orientation_series(1, 2, N);
    TSeries B = x2 * x1 * x2.invert(1) * x1.invert(0);
    B = B.truncated(order);
    if (B.has_negative_exponents())
        throw Error("splitting_B: inverse orientation classes fail to cancel");
    std::map<std::pair<int, int>, FreePoly> out;
    for (const auto& [e, c] : B.terms()) out[{e[0], e[1]}] = c;
    return out;
}

FreePoly abelianize(const FreePoly& f) {
    FreePoly out;
    for (const auto& t : f.terms()) {
        std::vector<uint32_t> letters(t.w->letters);
        std::sort(letters.begin(), letters.end());
        out = out + FreePoly::from_word(intern_word(letters), t.c);
    }
    return out;
}

bool cotensor_member(const FreePoly& f) {
    std::map<std::pair<Word, Word>, Int> acc;
    std::vector<uint32_t> left, right;
    std::function<void(const Word&, uint32_t, const Int&)> split = [&](const Word& w, uint32_t pos,
                                                                       const Int& c) {
        if (pos == w->length) {
            std::vector<uint32_t> rs(right);
            std::sort(rs.begin(), rs.end());
            acc[{intern_word(left), intern_word(rs)}] += c;
            return;
        }
        uint32_t k = w->letters[pos];
        for (uint32_t p = 0; p <= k; ++p) {
            uint32_t q = k - p;
            if (p) left.push_back(p);
            if (q) right.push_back(q);
            split(w, pos + 1, c);
            if (p) left.pop_back();
            if (q) right.pop_back();
        }
    };
    for (const auto& t : f.terms()) split(t.w, 0, t.c);
    for (const auto& [lr, c] : acc)
        if (lr.second->length != 0 && c != 0) return false;
    return true;
}

// --- dimension counts ---------------------------------------------------------

std::vector<Int> partition_numbers(int n_max) {
    std::vector<Int> p(n_max + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n_max; ++part)
        for (int s = part; s <= n_max; ++s) p[s] += p[s - part];
    return p;
}

std::vector<Int> generator_counts(int w_max) {
    // gp[p][s] = number of partitions of s into parts >= p
    std::vector<std::vector<Int>> gp(w_max + 2, std::vector<Int>(w_max + 1, 0));
    for (int p = w_max + 1; p >= 1; --p) {
        gp[p][0] = 1;
        for (int s = 1; s <= w_max; ++s)
            gp[p][s] = (s >= p ? gp[p][s - p] : Int(0)) + (p + 1 <= w_max + 1 ? gp[p + 1][s] : Int(0));
    }
    std::vector<Int> g(w_max + 1, 0);
    for (int w = 0; w <= w_max; ++w)
        for (int p = 1; p < w; ++p)
            for (int q = p + 1; p + q <= w; ++q) g[w] += gp[p][w - p - q];
    return g;
}

std::vector<Int> graded_dims(int w_max) {
    if (w_max < 0) throw BadInput("graded_dims: negative weight");
    auto p = partition_numbers(w_max);
    std::vector<Int> u(w_max + 1, 0);
    u[0] = 1;
    for (int w = 1; w <= w_max; ++w) {
        Int total = Int(1) << (w - 1);
        for (int i = 1; i <= w; ++i) total -= p[i] * u[w - i];
        u[w] = total;
        if (u[w] < 0) throw Error("graded_dims: negative dimension at weight " + std::to_string(w));
    }
    auto g = generator_counts(w_max);
    std::vector<Int> d(w_max + 1, 0);
    d[0] = 1;
    for (int w = 1; w <= w_max; ++w)
        for (int i = 1; i <= w; ++i) d[w] += g[i] * d[w - i];
    if (d != u) throw Error("graded_dims: generator enumeration disagrees with dimension count");
    return u;
}

}  // namespace ncfgl
