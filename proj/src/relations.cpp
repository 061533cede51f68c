#include "ncfgl/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ncfgl/errors.hpp"
#include "ncfgl/word.hpp"
#include "nlohmann/json.hpp"

namespace ncfgl {

namespace {

void append_coeff_name(std::ostringstream& os, const Int& c, const std::string& name, bool first) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) os << '-';
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (a != 1) os << a.str() << '*';
    os << name;
}

}  // namespace

std::string ExpressResult::to_text() const {
    if (status == NotInSpan) return "not in span";
    if (combo.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : combo) {
        append_coeff_name(os, c, name, first);
        first = false;
    }
    return os.str();
}

ExpressResult express(const FreePoly& target, const std::vector<DictEntry>& dict) {
    std::vector<int> weights(dict.size());
    for (size_t i = 0; i < dict.size(); ++i) {
        auto w = dict[i].value.homogeneous_weight();
        if (!w) throw BadInput("express: dictionary entry '" + dict[i].name + "' is not weight-homogeneous");
        weights[i] = *w;
    }

    ExpressResult res;
    if (target.is_zero()) {
        res.status = ExpressResult::Unique;
        return res;
    }
    auto tw = target.homogeneous_weight();
    if (!tw) throw BadInput("express: target is not weight-homogeneous");

    std::vector<int> cols;
    for (size_t i = 0; i < dict.size(); ++i)
        if (weights[i] == *tw) cols.push_back(static_cast<int>(i));
    if (cols.empty()) {
        res.status = ExpressResult::NotInSpan;
        res.detail = "no dictionary entries of weight " + std::to_string(*tw);
        return res;
    }

    std::vector<Word> words = basis_words(*tw);
    std::map<Word, int> row_of;
    for (size_t r = 0; r < words.size(); ++r) row_of[words[r]] = static_cast<int>(r);

    IntMat m(static_cast<int>(words.size()), static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& t : dict[cols[c]].value.terms()) m.at(row_of.at(t.w), static_cast<int>(c)) = t.c;
    std::vector<Int> b(words.size());
    for (const auto& t : target.terms()) b[row_of.at(t.w)] = t.c;

    IntSolve sol = solve_integer(m, b);
    switch (sol.status) {
        case IntSolve::Unique:
            res.status = ExpressResult::Unique;
            break;
        case IntSolve::NonUnique:
            res.status = ExpressResult::NonUnique;
            res.detail = "non-unique; canonical solution in dictionary order";
            break;
        default:
            res.status = ExpressResult::NotInSpan;
            res.detail = sol.obstruction;
            return res;
    }
    for (size_t c = 0; c < cols.size(); ++c)
        if (sol.x[c] != 0) res.combo.emplace_back(dict[cols[c]].name, sol.x[c]);
    return res;
}

int GenSpec::weight() const {
    int w = p + q;
    for (int i : ivec) w += i;
    return w;
}

std::string GenSpec::name() const {
    std::ostringstream os;
    if (!ivec.empty()) {
        os << "phi[";
        for (size_t i = 0; i < ivec.size(); ++i) os << (i ? "," : "") << ivec[i];
        os << ']';
    }
    os << "Ups[" << p << ',' << q << ']';
    return os.str();
}

namespace {

// descending partitions of rem into parts >= lo, each part <= hi
void rec_parts(int rem, int hi, int lo, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (rem == 0) {
        out.push_back(acc);
        return;
    }
    for (int t = std::min(hi, rem); t >= lo; --t) {
        acc.push_back(t);
        rec_parts(rem - t, t, lo, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<GenSpec> commutator_generators(int w_max) {
    std::vector<GenSpec> out;
    for (int w = 3; w <= w_max; ++w)
        for (int p = 1; 2 * p < w; ++p)
            for (int q = p + 1; p + q <= w; ++q) {
                std::vector<std::vector<int>> parts;
                std::vector<int> acc;
                rec_parts(w - p - q, w, p, acc, parts);
                for (auto& iv : parts) out.push_back(GenSpec{std::move(iv), p, q});
            }
    std::sort(out.begin(), out.end(), [](const GenSpec& a, const GenSpec& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        if (a.p != b.p) return a.p < b.p;
        if (a.q != b.q) return a.q < b.q;
        return a.ivec < b.ivec;
    });
    return out;
}

namespace {

void rec_ywords(int rem, const std::vector<GenSpec>& gens, std::vector<int>& acc,
                std::vector<std::vector<int>>& out) {
    if (rem == 0) {
        out.push_back(acc);
        return;
    }
    for (size_t i = 0; i < gens.size(); ++i) {
        int gw = gens[i].weight();
        if (gw > rem) continue;
        acc.push_back(static_cast<int>(i));
        rec_ywords(rem - gw, gens, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<DictEntry> module_family(int w, const FglEngine& eng) {
    if (w < 1) throw BadInput("module_family: weight must be positive");
    if (w > eng.order()) throw BadInput("module_family: weight exceeds engine order");

    std::vector<GenSpec> gens = commutator_generators(w);
    std::vector<FreePoly> gen_val;
    gen_val.reserve(gens.size());
    for (const auto& g : gens) gen_val.push_back(eng.phi_word(g.ivec, eng.upsilon(g.p, g.q)));

    std::vector<FreePoly> xval(w + 1);
    for (int k = 1; k <= w; ++k) xval[k] = eng.generator_X(k);

    std::vector<DictEntry> out;
    for (int v = 0; v <= w; ++v) {
        std::vector<std::vector<int>> ywords;
        std::vector<int> acc;
        rec_ywords(v, gens, acc, ywords);
        if (ywords.empty()) continue;

        int u = w - v;
        std::vector<std::vector<int>> parts;  // descending partitions of u (just {} for u = 0)
        acc.clear();
        rec_parts(u, std::max(u, 1), 1, acc, parts);

        for (const auto& yw : ywords)
            for (const auto& part : parts) {
                std::vector<int> mult(w + 1, 0);
                for (int t : part) ++mult[t];
                FreePoly val = FreePoly::one();
                std::ostringstream os;
                for (int g : yw) {
                    val *= gen_val[g];
                    os << (os.tellp() > 0 ? "*" : "") << gens[g].name();
                }
                for (int k = 1; k <= w; ++k)
                    for (int e = 0; e < mult[k]; ++e) val *= xval[k];
                for (int k = 1; k <= w; ++k) {
                    if (!mult[k]) continue;
                    os << (os.tellp() > 0 ? "*" : "") << 'X' << k;
                    if (mult[k] > 1) os << '^' << mult[k];
                }
                out.push_back(DictEntry{os.str(), std::move(val)});
            }
    }
    return out;
}

std::vector<BasisRow> basis_check(int w_max, const FglEngine& eng) {
    if (w_max > eng.order()) throw BadInput("basis_check: w_max exceeds engine order");
    std::vector<BasisRow> rows;
    for (int w = 1; w <= w_max; ++w) {
        std::vector<DictEntry> fam = module_family(w, eng);
        std::vector<Word> words = basis_words(w);
        std::map<Word, int> col_of;
        for (size_t c = 0; c < words.size(); ++c) col_of[words[c]] = static_cast<int>(c);

        IntMat m(static_cast<int>(fam.size()), static_cast<int>(words.size()));
        for (size_t r = 0; r < fam.size(); ++r)
            for (const auto& t : fam[r].value.terms()) m.at(static_cast<int>(r), col_of.at(t.w)) = t.c;

        HnfResult h = hermite_normal_form(m);
        BasisRow row;
        row.weight = w;
        row.family_size = static_cast<int>(fam.size());
        row.expected = Int(1) << (w - 1);
        row.rank = h.rank;
        row.count_ok = Int(row.family_size) == row.expected;
        row.full_rank = Int(h.rank) == row.expected;
        row.index = 0;
        if (row.full_rank) {
            row.index = 1;
            for (int i = 0; i < h.rank; ++i) row.index *= h.h.at(i, h.pivot_col[i]);
        }
        rows.push_back(row);
    }
    return rows;
}

bool all_ok(const std::vector<RelationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const RelationReport& r) { return r.ok; });
}

std::string reports_to_json(const std::vector<RelationReport>& reports) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json e;
        e["relation"] = r.relation;
        e["status"] = r.ok ? "ok" : "fail";
        e["lhs"] = r.lhs;
        e["rhs"] = r.rhs;
        j.push_back(e);
    }
    return j.dump(2);
}

namespace {

struct SuiteBuilder {
    const FglEngine& eng;
    std::vector<RelationReport> reports;

    const FreePoly& U(int p, int q) { return eng.upsilon(p, q); }
    FreePoly ph(std::vector<int> ks, const FreePoly& a) { return eng.phi_word(ks, a); }
    FreePoly lam(int k, int p, int q) {
        return ph({k}, U(p, q)) + ph({p}, U(q, k)) + ph({q}, U(k, p));
    }

    void check(const std::string& name, const FreePoly& lhs, const FreePoly& rhs) {
        RelationReport r;
        r.relation = name;
        r.ok = lhs == rhs;
        r.lhs = lhs.to_text();
        r.rhs = rhs.to_text();
        reports.push_back(std::move(r));
    }

    // aggregated length-filtration family: every sampled value must have
    // min word length >= bound (zero passes)
    void check_lengths(const std::string& name,
                       const std::vector<std::pair<std::string, FreePoly>>& samples, int bound) {
        RelationReport r;
        r.relation = name;
        r.ok = true;
        r.lhs = std::to_string(samples.size()) + " values, min length >= " + std::to_string(bound);
        for (const auto& [label, value] : samples) {
            auto len = value.min_word_length();
            if (len && *len < bound) {
                r.ok = false;
                r.lhs = label + " has length-" + std::to_string(*len) + " terms";
                r.rhs = value.to_text();
                break;
            }
        }
        reports.push_back(std::move(r));
    }
};

}  // namespace

std::vector<RelationReport> verify_relation_suite(int w_max, const FglEngine& eng) {
    if (w_max > eng.order()) throw BadInput("verify_relation_suite: w_max exceeds engine order");
    SuiteBuilder sb{eng, {}};

    for (int k = 3; k <= w_max; ++k) {
        FreePoly sum;
        for (int p = 1; p < k; ++p) sum += sb.U(p, k - p);
        std::ostringstream name;
        name << "sum_{p+q=" << k << "} Ups[p,q] = 0";
        sb.check(name.str(), sum, FreePoly{});
    }

    auto U = [&](int p, int q) -> const FreePoly& { return sb.U(p, q); };
    auto ph = [&](std::vector<int> ks, const FreePoly& a) { return sb.ph(std::move(ks), a); };

    if (w_max >= 6) {
        sb.check("Ups[2,4]+Ups[4,2] = -Ups[3,3]", U(2, 4) + U(4, 2), -U(3, 3));
        sb.check("-Ups[3,3] = 6*Ups[1,2]^2", -U(3, 3), Int(6) * (U(1, 2) * U(1, 2)));
        sb.check("Lam[1,2,3] = -Ups[1,2]^2", sb.lam(1, 2, 3), -(U(1, 2) * U(1, 2)));
    }
    if (w_max >= 7) {
        sb.check("Ups[2,5]+Ups[5,2] = -Ups[3,4]-Ups[4,3]", U(2, 5) + U(5, 2), -U(3, 4) - U(4, 3));
        sb.check("-Ups[3,4]-Ups[4,3] = 6*Ups[1,2]*Ups[1,3] + 6*Ups[1,2]*phi[1]Ups[1,2] + 8*Ups[1,3]*Ups[1,2]",
                 -U(3, 4) - U(4, 3),
                 Int(6) * (U(1, 2) * U(1, 3)) + Int(6) * (U(1, 2) * ph({1}, U(1, 2))) +
                     Int(8) * (U(1, 3) * U(1, 2)));
        sb.check("Lam[1,2,4] display", sb.lam(1, 2, 4),
                 Int(2) * (U(1, 2) * U(1, 3)) - Int(2) * (U(1, 2) * ph({1}, U(1, 2))) -
                     Int(4) * (U(1, 3) * U(1, 2)) + Int(6) * (ph({1}, U(1, 2)) * U(1, 2)));
    }
    if (w_max >= 8) {
        sb.check("Ups[3,5]+Ups[5,3] display", U(3, 5) + U(5, 3),
                 Int(-6) * (U(1, 2) * U(1, 4)) + Int(6) * (U(1, 2) * U(2, 3)) +
                     U(1, 2) * ph({1, 1}, U(1, 2)) - Int(9) * (U(1, 2) * ph({2}, U(1, 2))) -
                     Int(8) * (U(1, 3) * ph({1}, U(1, 2))) - Int(10) * (U(1, 4) * U(1, 2)) +
                     Int(12) * (U(2, 3) * U(1, 2)));
        sb.check("Ups[4,4] display", U(4, 4),
                 Int(-6) * (U(1, 2) * U(2, 3)) - Int(6) * (U(1, 2) * ph({1}, U(1, 3))) -
                     Int(3) * (U(1, 2) * ph({1, 1}, U(1, 2))) + Int(3) * (U(1, 2) * ph({2}, U(1, 2))) -
                     Int(8) * (U(1, 3) * U(1, 3)) - Int(4) * (U(1, 3) * ph({1}, U(1, 2))) -
                     Int(12) * (U(2, 3) * U(1, 2)));
        sb.check("Lam[1,3,4] display", sb.lam(1, 3, 4),
                 Int(3) * (U(1, 2) * U(1, 4)) - Int(3) * (U(1, 2) * U(2, 3)) -
                     Int(3) * (U(1, 2) * ph({1}, U(1, 3))) - Int(6) * (U(1, 2) * ph({1, 1}, U(1, 2))) -
                     Int(6) * (U(1, 2) * ph({2}, U(1, 2))) - Int(2) * (U(1, 3) * U(1, 3)) -
                     Int(7) * (U(1, 3) * ph({1}, U(1, 2))) - Int(2) * (U(1, 4) * U(1, 2)) +
                     Int(3) * (U(2, 3) * U(1, 2)) - Int(3) * (ph({1}, U(1, 2)) * ph({1}, U(1, 2))) -
                     Int(8) * (ph({1}, U(1, 3)) * U(1, 2)) + Int(9) * (ph({2}, U(1, 2)) * U(1, 2)));
    }
    if (w_max >= 9) {
        sb.check("Ups[4,5]+Ups[5,4] display", U(4, 5) + U(5, 4),
                 Int(69) * (U(1, 2) * U(1, 2) * U(1, 2)) - Int(6) * (U(1, 2) * U(2, 4)) -
                     Int(6) * (U(1, 2) * ph({1}, U(1, 4))) - Int(5) * (U(1, 2) * ph({1, 1}, U(1, 3))) -
                     U(1, 2) * ph({1, 1, 1}, U(1, 2)) - Int(9) * (U(1, 2) * ph({2}, U(1, 3))) -
                     Int(3) * (U(1, 2) * ph({2, 1}, U(1, 2))) + Int(9) * (U(1, 2) * ph({3}, U(1, 2))) -
                     Int(8) * (U(1, 3) * U(1, 4)) - Int(8) * (U(1, 3) * U(2, 3)) -
                     Int(16) * (U(1, 3) * ph({1}, U(1, 3))) - Int(6) * (U(1, 3) * ph({1, 1}, U(1, 2))) -
                     Int(10) * (U(1, 4) * U(1, 3)) - Int(5) * (U(1, 4) * ph({1}, U(1, 2))) -
                     Int(12) * (U(2, 3) * U(1, 3)) - Int(18) * (U(2, 3) * ph({1}, U(1, 2))) -
                     Int(15) * (U(2, 4) * U(1, 2)));
        sb.check("(phi[1]phi[3]-phi[3]phi[1])Ups[1,4] display",
                 ph({1, 3}, U(1, 4)) - ph({3, 1}, U(1, 4)),
                 Int(3) * (U(1, 2) * ph({1}, U(1, 4))) + U(1, 3) * U(1, 4) - U(1, 4) * U(1, 3) -
                     Int(2) * (ph({1}, U(1, 4)) * U(1, 2)));
    }

    {
        std::vector<std::pair<std::string, FreePoly>> samples;
        bool pf = eng.convention() == Convention::PaperFigures;
        for (int p = 1; p < w_max; ++p)
            for (int q = 1; p + q <= w_max; ++q) {
                FreePoly zc = FreePoly::gen(p) * FreePoly::gen(q) - FreePoly::gen(q) * FreePoly::gen(p);
                std::ostringstream os;
                os << "Ups[" << p << ',' << q << "] " << (pf ? '-' : '+') << " [Z" << p << ",Z" << q << ']';
                samples.emplace_back(os.str(), pf ? U(p, q) - zc : U(p, q) + zc);
            }
        sb.check_lengths("Ups commutator congruence mod F3", samples, 3);
    }
    {
        std::vector<std::pair<std::string, FreePoly>> samples;
        for (int p = 1; p < w_max; ++p)
            for (int q = p; p + q <= w_max; ++q) {
                std::ostringstream os;
                os << "Ups[" << p << ',' << q << "]+Ups[" << q << ',' << p << ']';
                samples.emplace_back(os.str(), U(p, q) + U(q, p));
            }
        sb.check_lengths("weak anti-symmetry residue mod F4", samples, 4);
    }
    {
        std::vector<std::pair<std::string, FreePoly>> samples;
        for (int k = 1; 3 * k < w_max; ++k)
            for (int p = k + 1; p <= w_max; ++p)
                for (int q = k + 1; k + p + q <= w_max; ++q) {
                    if (q == p || q <= k) continue;
                    std::ostringstream os;
                    os << "Lam[" << k << ',' << p << ',' << q << ']';
                    samples.emplace_back(os.str(), sb.lam(k, p, q));
                }
        sb.check_lengths("Jacobi residue mod F4", samples, 4);
    }
    // phi-commutator filtration, grouped by source word length
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<uint32_t>> words;
        if (len == 1)
            words = {{1}, {2}, {3}};
        else if (len == 2)
            words = {{1, 1}, {1, 2}, {2, 1}};
        else
            words = {{1, 1, 1}, {1, 2, 1}};
        std::vector<std::pair<std::string, FreePoly>> samples;
        std::vector<std::pair<int, int>> pqs = {{1, 2}, {1, 3}, {2, 3}};
        for (auto [p, q] : pqs)
            for (const auto& lw : words) {
                FreePoly a = FreePoly::from_word(intern_word(lw));
                int wt = p + q + a.max_weight();
                if (wt > eng.order() || wt > w_max) continue;
                std::ostringstream os;
                os << "(phi[" << p << "]phi[" << q << "]-phi[" << q << "]phi[" << p << "])("
                   << a.to_text() << ')';
                samples.emplace_back(os.str(), sb.ph({p, q}, a) - sb.ph({q, p}, a));
            }
        if (!samples.empty())
            sb.check_lengths("phi commutator filtration, length-" + std::to_string(len) + " words",
                             samples, len + 1);
    }

    if (eng.order() >= 5) {
        auto table = verify_commutators(eng);
        sb.reports.insert(sb.reports.end(), table.begin(), table.end());
    }
    return sb.reports;
}

std::vector<RelationReport> verify_commutators(const FglEngine& eng) {
    if (eng.order() < 5) throw BadInput("verify_commutators: engine order must be >= 5");
    SuiteBuilder sb{eng, {}};
    const FreePoly X1 = eng.generator_X(1), X2 = eng.generator_X(2), X3 = eng.generator_X(3);
    auto U = [&](int p, int q) -> const FreePoly& { return sb.U(p, q); };
    auto ph = [&](std::vector<int> ks, const FreePoly& a) { return sb.ph(std::move(ks), a); };

    sb.check("[X1,X2] = 6*Ups[1,2]", X1 * X2 - X2 * X1, Int(6) * U(1, 2));
    sb.check("[X1,X3] = 4*phi[1]Ups[1,2] + 4*Ups[1,3] + 8*Ups[1,2]*X1", X1 * X3 - X3 * X1,
             Int(4) * ph({1}, U(1, 2)) + Int(4) * U(1, 3) + Int(8) * (U(1, 2) * X1));
    sb.check(
        "[X2,X3] = 2*phi[1,1]Ups[1,2] - 4*phi[1]Ups[1,3] + 6*Ups[2,3] - 3*phi[1]Ups[1,2]*X1 + "
        "2*Ups[1,3]*X1 - 6*Ups[1,2]*X2 + Ups[1,2]*X1^2",
        X2 * X3 - X3 * X2,
        Int(2) * ph({1, 1}, U(1, 2)) - Int(4) * ph({1}, U(1, 3)) + Int(6) * U(2, 3) -
            Int(3) * (ph({1}, U(1, 2)) * X1) + Int(2) * (U(1, 3) * X1) - Int(6) * (U(1, 2) * X2) +
            U(1, 2) * X1 * X1);
    return sb.reports;
}

}  // namespace ncfgl
