#include "ncfgl/bfk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ncfgl/errors.hpp"

namespace ncfgl {

namespace {

void append_phi_word(std::ostringstream& os, Word w) {
    os << "phi[";
    for (uint32_t i = 0; i < w->length; ++i) {
        if (i) os << ',';
        os << w->letters[i];
    }
    os << ']';
}

std::string phi_word_text(Word w) {
    if (w->length == 0) return "1";
    std::ostringstream os;
    append_phi_word(os, w);
    return os.str();
}

}  // namespace

std::string BElement::to_text() const {
    if (p_.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p_.terms()) {
        if (first) {
            if (t.c < 0) os << '-';
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        Int a = t.c < 0 ? Int(-t.c) : t.c;
        if (t.w->length == 0) {
            os << a.str();
            continue;
        }
        if (a != 1) os << a.str() << '*';
        append_phi_word(os, t.w);
    }
    return os.str();
}

std::string BElement::to_json() const {
    nlohmann::json j = nlohmann::json::parse(p_.to_json());
    j["alphabet"] = "phi";
    return j.dump();
}

BTensor BTensor::from_terms(std::vector<Term> terms) {
    auto key_less = [](const Term& a, const Term& b) {
        int c = word_cmp(a.left, b.left);
        if (c != 0) return c < 0;
        return word_cmp(a.right, b.right) < 0;
    };
    std::sort(terms.begin(), terms.end(), key_less);
    BTensor t;
    for (auto& term : terms) {
        if (!t.terms_.empty() && t.terms_.back().left == term.left && t.terms_.back().right == term.right)
            t.terms_.back().c += term.c;
        else
            t.terms_.push_back(std::move(term));
    }
    std::erase_if(t.terms_, [](const Term& x) { return x.c == 0; });
    return t;
}

bool BTensor::operator==(const BTensor& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].left != o.terms_[i].left || terms_[i].right != o.terms_[i].right ||
            terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

BTensor BTensor::operator+(const BTensor& o) const {
    std::vector<Term> all(terms_);
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(std::move(all));
}

BTensor BTensor::operator-(const BTensor& o) const { return *this + o * Int(-1); }

BTensor BTensor::operator*(const BTensor& o) const {
    std::vector<Term> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            all.push_back(Term{concat_words(a.left, b.left), concat_words(a.right, b.right), a.c * b.c});
    return from_terms(std::move(all));
}

BTensor BTensor::operator*(const Int& s) const {
    if (s == 0) return {};
    BTensor t(*this);
    for (auto& term : t.terms_) term.c *= s;
    return t;
}

BElement BTensor::left_contract() const {
    FreePoly p;
    for (const auto& t : terms_) p += FreePoly::from_word(concat_words(t.left, t.right), t.c);
    return BElement(p);
}

BElement BTensor::apply_counit_left() const {
    FreePoly p;
    for (const auto& t : terms_)
        if (t.left->length == 0) p += FreePoly::from_word(t.right, t.c);
    return BElement(p);
}

BElement BTensor::apply_counit_right() const {
    FreePoly p;
    for (const auto& t : terms_)
        if (t.right->length == 0) p += FreePoly::from_word(t.left, t.c);
    return BElement(p);
}

std::string BTensor::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            if (t.c < 0) os << '-';
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        Int a = t.c < 0 ? Int(-t.c) : t.c;
        if (a != 1) os << a.str() << '*';
        os << phi_word_text(t.left) << " (x) " << phi_word_text(t.right);
    }
    return os.str();
}

BElement q_poly(int n, int j) {
    if (n < 0 || j < 0) throw BadInput("q_poly: negative index");
    if (n == 0) return j == 0 ? BElement::one() : BElement();
    // sum over weak compositions of j into n parts; zero parts contribute phi_0 = 1
    FreePoly out;
    std::vector<uint32_t> letters;
    std::function<void(int, int)> rec = [&](int slot, int rest) {
        if (slot == n - 1) {
            if (rest > 0) letters.push_back(static_cast<uint32_t>(rest));
            out += FreePoly::from_word(intern_word(letters));
            if (rest > 0) letters.pop_back();
            return;
        }
        for (int take = 0; take <= rest; ++take) {
            if (take > 0) letters.push_back(static_cast<uint32_t>(take));
            rec(slot + 1, rest - take);
            if (take > 0) letters.pop_back();
        }
    };
    rec(0, j);
    return BElement(out);
}

namespace {

BTensor coproduct_gen(uint32_t n, CoproductIndexing idx) {
    std::vector<BTensor::Term> terms;
    for (uint32_t p = 0; p <= n; ++p) {
        uint32_t q = n - p;
        int superscript = idx == CoproductIndexing::Shifted ? static_cast<int>(1 + p) : static_cast<int>(p);
        BElement qq = q_poly(superscript, static_cast<int>(q));
        Word left = p == 0 ? empty_word() : single_letter(p);
        for (const auto& t : qq.poly().terms()) terms.push_back(BTensor::Term{left, t.w, t.c});
    }
    return BTensor::from_terms(std::move(terms));
}

}  // namespace

BTensor coproduct(const BElement& b, CoproductIndexing idx) {
    std::vector<BTensor::Term> out;
    for (const auto& t : b.poly().terms()) {
        BTensor prod = BTensor::from_terms({BTensor::Term{empty_word(), empty_word(), t.c}});
        for (uint32_t i = 0; i < t.w->length; ++i) prod = prod * coproduct_gen(t.w->letters[i], idx);
        out.insert(out.end(), prod.terms().begin(), prod.terms().end());
    }
    return BTensor::from_terms(std::move(out));
}

Int counit(const BElement& b) { return b.poly().coeff(empty_word()); }

namespace {

// chi(phi_n) by weight recursion from m(chi (x) id) Delta = unit counit
const FreePoly& antipode_gen(uint32_t n) {
    static std::map<uint32_t, FreePoly> cache;
    static std::mutex m;
    std::lock_guard lk(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // chi(phi_n) = -sum_{p<n} chi(phi_p) Q_{n-p}^{(1+p)}
    for (uint32_t k = 1; k <= n; ++k) {
        if (cache.count(k)) continue;
        FreePoly acc;
        for (uint32_t p = 0; p < k; ++p) {
            FreePoly chi_p = p == 0 ? FreePoly::one() : cache.at(p);
            acc += chi_p * q_poly(static_cast<int>(1 + p), static_cast<int>(k - p)).poly();
        }
        cache[k] = -acc;
    }
    return cache.at(n);
}

}  // namespace

BElement antipode(const BElement& b) {
    FreePoly out;
    for (const auto& t : b.poly().terms()) {
        // anti-multiplicative on words
        FreePoly prod = FreePoly::constant(t.c);
        for (uint32_t i = t.w->length; i-- > 0;) prod *= antipode_gen(t.w->letters[i]);
        out += prod;
    }
    return BElement(out);
}

FreePoly act(const BElement& b, const FreePoly& a, const FglEngine& engine) {
    FreePoly out;
    for (const auto& t : b.poly().terms()) {
        FreePoly r = a;
        for (uint32_t i = t.w->length; i-- > 0;) r = engine.phi(static_cast<int>(t.w->letters[i]), r);
        out += r * t.c;
    }
    return out;
}

bool BTensor3::operator==(const BTensor3& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i].a != o.terms[i].a || terms[i].b != o.terms[i].b || terms[i].c != o.terms[i].c ||
            terms[i].coeff != o.terms[i].coeff)
            return false;
    return true;
}

namespace {

BTensor3 normalize3(std::vector<BTensor3::Term> terms) {
    auto less = [](const BTensor3::Term& x, const BTensor3::Term& y) {
        int c = word_cmp(x.a, y.a);
        if (c != 0) return c < 0;
        c = word_cmp(x.b, y.b);
        if (c != 0) return c < 0;
        return word_cmp(x.c, y.c) < 0;
    };
    std::sort(terms.begin(), terms.end(), less);
    BTensor3 out;
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().a == t.a && out.terms.back().b == t.b &&
            out.terms.back().c == t.c)
            out.terms.back().coeff += t.coeff;
        else
            out.terms.push_back(t);
    }
    std::erase_if(out.terms, [](const BTensor3::Term& t) { return t.coeff == 0; });
    return out;
}

}  // namespace

BTensor3 coproduct_left(const BTensor& t, CoproductIndexing idx) {
    std::vector<BTensor3::Term> out;
    for (const auto& term : t.terms()) {
        BTensor d = coproduct(BElement::from_word(term.left), idx);
        for (const auto& dt : d.terms())
            out.push_back(BTensor3::Term{dt.left, dt.right, term.right, dt.c * term.c});
    }
    return normalize3(std::move(out));
}

BTensor3 coproduct_right(const BTensor& t, CoproductIndexing idx) {
    std::vector<BTensor3::Term> out;
    for (const auto& term : t.terms()) {
        BTensor d = coproduct(BElement::from_word(term.right), idx);
        for (const auto& dt : d.terms())
            out.push_back(BTensor3::Term{term.left, dt.left, dt.right, dt.c * term.c});
    }
    return normalize3(std::move(out));
}

}  // namespace ncfgl
