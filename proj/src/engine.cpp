#include "ncfgl/engine.hpp"

#include "ncfgl/errors.hpp"

namespace ncfgl {

BezoutResult bezout_lambdas(int n) {
    if (n < 2) throw BadInput("bezout_lambdas: n must be >= 2");
    BezoutResult r;
    r.g = binomial(n, 1);
    r.lambda.assign(n - 1, 0);
    r.lambda[0] = 1;
    for (int k = 2; k <= n - 1; ++k) {
        Int c = binomial(n, k);
        if (c % r.g == 0) continue;  // keep weight on the smaller indices
        ExtGcd e = ext_gcd(r.g, c);
        for (int i = 0; i < k - 1; ++i) r.lambda[i] *= e.x;
        r.lambda[k - 1] = e.y;
        r.g = e.g;
    }
    return r;
}

FglEngine::FglEngine(int order, Convention convention)
    : order_(order), convention_(convention), xp_(order + 2) {
    if (order < 1) throw BadInput("FglEngine: order must be >= 1");
}

FreePoly FglEngine::phi(int k, const FreePoly& a) const {
    if (k < 0) throw BadInput("phi: negative index");
    if (k == 0) return a;
    if (k + a.max_weight() > order_)
        throw PrecisionExhausted("phi: weight " + std::to_string(k + a.max_weight()) +
                                 " exceeds engine order " + std::to_string(order_));
    // phi_n(a) = Z_n a - sum_{j<n} phi_j(a) c_{j,n},  c_{j,n} = [T^{1+n}] X^{1+j}
    std::vector<FreePoly> ph(k + 1);
    ph[0] = a;
    for (int n = 1; n <= k; ++n) {
        FreePoly acc = FreePoly::gen(n) * a;
        for (int j = 0; j < n; ++j) acc -= ph[j] * xp_.coeff(1 + j, 1 + n);
        ph[n] = std::move(acc);
    }
    return ph[k];
}

FreePoly FglEngine::phi_word(std::span<const int> w, const FreePoly& a) const {
    FreePoly r = a;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = phi(*it, r);
    return r;
}

const std::map<std::pair<int, int>, FreePoly>& FglEngine::direct_table() const {
    std::lock_guard lk(mutex_);
    if (!upsilon_direct_) {
        auto table = std::make_unique<std::map<std::pair<int, int>, FreePoly>>();
        // left-coefficient extraction of X(T_2)X(T_1) over ordered monomials;
        // entry (p,q) sits at exponent (1+p, 1+q)
        const int ext_order = order_ + 2;
        TSeries yx = orientation_series(1, 2, ext_order) * orientation_series(0, 2, ext_order);
        XExpansion e = extract_left(yx, xp_);
        for (const auto& [exp, c] : e.terms()) {
            if (exp[0] < 1 || exp[1] < 1) throw Error("upsilon: unexpected exponent in braiding expansion");
            (*table)[{exp[0] - 1, exp[1] - 1}] = c;
        }
        upsilon_direct_ = std::move(table);
    }
    return *upsilon_direct_;
}

const FreePoly& FglEngine::upsilon_direct(int p, int q) const {
    static const FreePoly zero;
    if (p < 0 || q < 0) throw BadInput("upsilon: negative index");
    if (p + q > order_)
        throw PrecisionExhausted("upsilon: weight " + std::to_string(p + q) + " exceeds engine order " +
                                 std::to_string(order_));
    const auto& t = direct_table();
    auto it = t.find({p, q});
    return it == t.end() ? zero : it->second;
}

const FreePoly& FglEngine::upsilon(int p, int q, Convention conv) const {
    return conv == Convention::Direct ? upsilon_direct(p, q) : upsilon_direct(q, p);
}

const FreePoly& FglEngine::upsilon(int p, int q) const { return upsilon(p, q, convention_); }

UpsilonTable FglEngine::upsilon_table(Convention conv) const {
    UpsilonTable t;
    t.order = order_;
    t.convention = conv;
    for (const auto& [pq, c] : direct_table()) {
        auto key = conv == Convention::Direct ? pq : std::make_pair(pq.second, pq.first);
        t.u[key] = c;
    }
    return t;
}

const std::map<std::pair<int, int>, FreePoly>& FglEngine::fgl_map() const {
    std::lock_guard lk(mutex_);
    if (!fgl_) {
        auto table = std::make_unique<std::map<std::pair<int, int>, FreePoly>>();
        // sum_k Z_k (T_1+T_2)^{1+k} = sum a_{i,j} X(T_1)^i X(T_2)^j
        const int ext_order = order_ + 1;
        TSeries sum = orientation_series(0, 1, ext_order).substitute_sum(2);
        XExpansion e = extract_left(sum, xp_);
        for (const auto& [exp, c] : e.terms()) (*table)[{exp[0], exp[1]}] = c;
        fgl_ = std::move(table);
    }
    return *fgl_;
}

const FreePoly& FglEngine::fgl_coeff(int i, int j) const {
    static const FreePoly zero;
    if (i < 0 || j < 0) throw BadInput("fgl_coeff: negative index");
    if (i + j > order_ + 1)
        throw PrecisionExhausted("fgl_coeff: index " + std::to_string(i + j) +
                                 " exceeds engine order + 1");
    const auto& t = fgl_map();
    auto it = t.find({i, j});
    return it == t.end() ? zero : it->second;
}

FglTable FglEngine::fgl_table() const {
    FglTable t;
    t.order = order_;
    t.a = fgl_map();
    return t;
}

const std::vector<FreePoly>& FglEngine::formal_inverse() const {
    {
        std::lock_guard lk(mutex_);
        if (inverse_) return *inverse_;
    }
    // build outside the lock: fgl_coeff locks the mutex itself
    auto iota = std::make_unique<std::vector<FreePoly>>(order_ + 1);
    {
        (*iota)[1] = -FreePoly::one();
        const int N = order_;
        // triangular fixed point of realize(x +_F iota(x)) = 0 in one variable
        auto realize_sum = [&](const std::vector<FreePoly>& io) {
            TSeries x = orientation_series(0, 1, N);
            TSeries ix(1, N);
            {
                TSeries xpow = TSeries::unit(1, N);
                for (int k = 1; k <= N; ++k) {
                    xpow = xpow * x;
                    if (!io[k].is_zero()) ix = ix + xpow.left_mul(io[k]);
                }
            }
            TSeries total = x + ix;
            std::vector<TSeries> xp_pows(N + 1, TSeries::unit(1, N));
            std::vector<TSeries> ix_pows(N + 1, TSeries::unit(1, N));
            for (int k = 1; k <= N; ++k) {
                xp_pows[k] = xp_pows[k - 1] * x;
                ix_pows[k] = ix_pows[k - 1] * ix;
            }
            for (int i = 1; i <= N; ++i)
                for (int j = 1; i + j <= N + 1; ++j) {
                    const FreePoly& a = fgl_coeff(i, j);
                    if (a.is_zero()) continue;
                    if (i + j > N) continue;
                    total = total + (xp_pows[i] * ix_pows[j]).left_mul(a);
                }
            return total;
        };
        for (int n = 2; n <= N; ++n) {
            TSeries res = realize_sum(*iota);
            ExpVec e{n};
            FreePoly rn = res.coeff(e);
            if (!rn.is_zero()) (*iota)[n] = -rn;
        }
        TSeries final_res = realize_sum(*iota);
        if (!final_res.is_zero()) throw Error("formal_inverse: residual after solve");
    }
    std::lock_guard lk(mutex_);
    if (!inverse_) inverse_ = std::move(iota);
    return *inverse_;
}

FreePoly FglEngine::generator_X(int n) const {
    if (n < 1) throw BadInput("generator_X: n must be >= 1");
    if (n > order_) throw PrecisionExhausted("generator_X: n exceeds engine order");
    switch (n) {
        case 1:
            return fgl_coeff(1, 1);
        case 2:
            return fgl_coeff(1, 2);
        case 3:
            return -fgl_coeff(1, 3) + fgl_coeff(2, 2);
        default: {
            BezoutResult bz = bezout_lambdas(n + 1);
            FreePoly x;
            for (int k = 1; k <= n; ++k) {
                if (bz.lambda[k - 1] == 0) continue;
                x += fgl_coeff(k, n - k + 1) * bz.lambda[k - 1];
            }
            return x;
        }
    }
}

RewriteRules FglEngine::rules() const {
    RewriteRules r;
    r.order = order_;
    r.upsilon_direct = [this](int p, int q) -> FreePoly {
        if (p == 0 && q == 0) return FreePoly::one();
        return upsilon_direct(p, q);
    };
    r.phi = [this](int k, const FreePoly& a) { return phi(k, a); };
    return r;
}

}  // namespace ncfgl
