#include "bentice/poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace bentice {

// ---------------------------------------------------------------- variables

namespace {

struct Registry {
    std::vector<VarInfo> vars;
    std::map<std::string, int> by_name;

    Registry() {
        const char* gen[] = {"a1", "a2", "b1", "b2"};
        const char* genl[] = {"a_1", "a_2", "b_1", "b_2"};
        for (int s = 0; s < 4; ++s)
            for (int bar = 0; bar < 2; ++bar)
                for (int j = 1; j <= kMaxIndex; ++j) {
                    RowLabel r = bar ? RowLabel::bar(j) : RowLabel::plain(j);
                    add(Bank::generic, Sym(s), r, -1, std::string(gen[s]) + "^(" + r.str() + ")",
                        std::string(genl[s]) + "^{(" + r.latex() + ")}");
                }
        for (int s = 0; s < 2; ++s)
            for (int j = 0; j <= kMaxIndex; ++j) {
                std::string base = s == 0 ? "a" : "b";
                add(Bank::generic, s == 0 ? Sym::a : Sym::b, RowLabel::central(j), -1,
                    base + "^(" + std::to_string(j) + ")", base + "^{(" + std::to_string(j) + ")}");
            }
        add(Bank::deformation, Sym::q, {}, -1, "q", "q");
        for (int j = 0; j <= kMaxIndex; ++j)
            add(Bank::deformation, Sym::qj, {}, j, "q_" + std::to_string(j), "q_{" + std::to_string(j) + "}");
        for (int j = 0; j <= kMaxIndex; ++j)
            add(Bank::deformation, Sym::x, {}, j, "x_" + std::to_string(j), "x_{" + std::to_string(j) + "}");
        if ((int)vars.size() != kMaxVars) throw std::logic_error("variable registry size mismatch");
    }

    void add(Bank b, Sym s, RowLabel r, int idx, std::string name, std::string latex) {
        int id = (int)vars.size();
        vars.push_back({id, b, s, r, idx, name, latex});
        by_name[name] = id;
    }
};

const Registry& reg() {
    static const Registry r;
    return r;
}

void check_index(int j) {
    if (j < 0 || j > kMaxIndex) throw std::out_of_range("row index out of range: " + std::to_string(j));
}

int generic_id(int s, RowLabel r) {
    if (r.is_central()) return (s < 2 ? vars::a(r.index) : vars::b(r.index));
    if (r.index < 1 || r.index > kMaxIndex) throw std::out_of_range("row index out of range: " + r.str());
    return s * 2 * kMaxIndex + (r.is_bar() ? kMaxIndex : 0) + (r.index - 1);
}

}  // namespace

namespace vars {
int a1(RowLabel r) { return generic_id(0, r); }
int a2(RowLabel r) { return generic_id(1, r); }
int b1(RowLabel r) { return generic_id(2, r); }
int b2(RowLabel r) { return generic_id(3, r); }
int a(int c) { check_index(c); return 8 * kMaxIndex + c; }
int b(int c) { check_index(c); return 8 * kMaxIndex + (kMaxIndex + 1) + c; }
int q() { return kGenericVars; }
int qj(int j) { check_index(j); return kGenericVars + 1 + j; }
int x(int j) { check_index(j); return kGenericVars + 1 + (kMaxIndex + 1) + j; }
const VarInfo& info(int id) { return reg().vars.at(id); }
std::optional<int> by_name(const std::string& name) {
    auto it = reg().by_name.find(name);
    if (it == reg().by_name.end()) return std::nullopt;
    return it->second;
}
}  // namespace vars

// ---------------------------------------------------------------- monomials

bool Monomial::is_one() const {
    for (auto v : e) if (v) return false;
    return true;
}

int Monomial::total_degree() const {
    int s = 0;
    for (auto v : e) s += v;
    return s;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    for (int k = 0; k < kMaxVars; ++k) e[k] = int16_t(e[k] + o.e[k]);
    return *this;
}

Monomial& Monomial::operator/=(const Monomial& o) {
    for (int k = 0; k < kMaxVars; ++k) e[k] = int16_t(e[k] - o.e[k]);
    return *this;
}

Monomial Monomial::inverse() const {
    Monomial m;
    for (int k = 0; k < kMaxVars; ++k) m.e[k] = int16_t(-e[k]);
    return m;
}

bool Monomial::nonnegative() const {
    for (auto v : e) if (v < 0) return false;
    return true;
}

Bank Monomial::bank() const {
    bool g = false, d = false;
    for (int k = 0; k < kMaxVars; ++k)
        if (e[k]) (k < kGenericVars ? g : d) = true;
    if (g && d) throw std::invalid_argument("monomial mixes generic and deformation variables");
    return g ? Bank::generic : d ? Bank::deformation : Bank::none;
}

size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (auto v : m.e) {
        h ^= uint16_t(v);
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------- polynomials

namespace {

Bank combine(Bank a, Bank b) {
    if (a == Bank::none) return b;
    if (b == Bank::none || a == b) return a;
    throw std::invalid_argument("arithmetic across generic and deformation banks");
}

using Term = Poly::Term;

// merge two strictly descending term lists
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.push_back(subtract ? Term{b[j].first, -b[j].second} : b[j]);
            ++j;
        } else {
            GaussInt c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

Poly::Poly(const GaussInt& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::monomial(const Monomial& m, GaussInt c) {
    Poly p;
    if (!c.is_zero()) {
        p.terms_.emplace_back(m, std::move(c));
        p.bank_ = m.bank();
    }
    return p;
}

Poly Poly::var(int id, int k) {
    Monomial m;
    m.e[id] = int16_t(vars::is_half_unit(id) ? 2 * k : k);
    return monomial(m);
}

Poly Poly::x_half(int j, int k) {
    Monomial m;
    m.e[vars::x(j)] = int16_t(k);
    return monomial(m);
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    p.recompute_bank();
    return p;
}

void Poly::recompute_bank() {
    bank_ = Bank::none;
    for (auto& t : terms_) bank_ = combine(bank_, t.first.bank());
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

GaussInt Poly::constant_term() const {
    for (auto& t : terms_) if (t.first.is_one()) return t.second;
    return GaussInt(0);
}

int Poly::max_total_degree() const {
    int d = std::numeric_limits<int>::min();
    for (auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

int Poly::min_total_degree() const {
    int d = std::numeric_limits<int>::max();
    for (auto& t : terms_) d = std::min(d, t.first.total_degree());
    return d;
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || max_total_degree() == min_total_degree();
}

Poly& Poly::operator+=(const Poly& o) {
    bank_ = combine(bank_, o.bank_);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    terms_ = merge(terms_, o.terms_, false);
    if (terms_.empty()) bank_ = Bank::none;
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    bank_ = combine(bank_, o.bank_);
    terms_ = merge(terms_, o.terms_, true);
    if (terms_.empty()) bank_ = Bank::none;
    return *this;
}

Poly Poly::scaled(const GaussInt& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    if (c.is_one()) return r;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.first *= m;
    r.bank_ = combine(r.bank_, m.bank());
    return r;
}

Monomial Poly::min_exponents() const {
    Monomial m;
    if (terms_.empty()) return m;
    m = terms_[0].first;
    for (auto& t : terms_)
        for (int k = 0; k < kMaxVars; ++k) m.e[k] = std::min(m.e[k], t.first.e[k]);
    return m;
}

Poly operator*(const Poly& a, const Poly& b) {
    Bank bank = combine(a.bank_, b.bank_);
    if (a.terms_.empty() || b.terms_.empty()) return Poly();
    const Poly& big = a.terms_.size() >= b.terms_.size() ? a : b;
    const Poly& small = &big == &a ? b : a;
    Poly r;
    if (small.terms_.size() <= 4) {
        for (auto& [m, c] : small.terms_) {
            Poly s = big.shifted(m).scaled(c);
            r.terms_ = r.terms_.empty() ? std::move(s.terms_) : merge(r.terms_, s.terms_, false);
        }
        r.bank_ = r.terms_.empty() ? Bank::none : bank;
        return r;
    }
    std::unordered_map<Monomial, GaussInt, MonomialHash> acc;
    acc.reserve(a.terms_.size() * 4);
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.emplace_back(m, c);
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    r.terms_ = std::move(terms);
    r.bank_ = r.terms_.empty() ? Bank::none : bank;
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator-(const Poly& a) { return a.scaled(GaussInt(-1)); }

Poly Poly::pow(unsigned k) const {
    Poly r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

// ---------------------------------------------------------------- division

std::optional<Poly> exact_divide(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (p.is_zero()) return Poly();
    Monomial mp = p.min_exponents(), md = d.min_exponents();
    Poly dd = d.shifted(md.inverse());
    const auto& [ldm, ldc] = dd.terms().front();

    std::map<Monomial, GaussInt, std::greater<>> r;
    for (auto& [m, c] : p.terms()) r.emplace(m / mp, c);

    std::vector<Term> q;
    while (!r.empty()) {
        auto it = r.begin();
        Monomial qm = it->first / ldm;
        if (!qm.nonnegative()) return std::nullopt;
        auto qc = it->second.div_exact(ldc);
        if (!qc) return std::nullopt;
        r.erase(it);
        for (size_t k = 1; k < dd.terms().size(); ++k) {
            const auto& [m, c] = dd.terms()[k];
            Monomial key = m * qm;
            auto [pos, inserted] = r.try_emplace(key);
            pos->second -= c * *qc;
            if (pos->second.is_zero()) r.erase(pos);
        }
        q.emplace_back(qm, std::move(*qc));
    }
    Poly out = Poly::from_terms(std::move(q));
    return out.shifted(mp / md);
}

// ---------------------------------------------------------------- substitution

Poly substitute(const Poly& p, const Substitution& sigma) {
    std::map<std::pair<int, int>, Poly> cache;
    auto power = [&](int id, const Poly& img, int stored) -> Poly {
        auto key = std::make_pair(id, stored);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Poly r;
        bool half = vars::is_half_unit(id);
        if (half && stored % 2 != 0) {
            // x^{k/2} with k odd: only monomial images whose square root is exact
            if (!img.is_monomial() || !img.terms()[0].second.is_one())
                throw std::invalid_argument("substitute: half-integer power of non-monomial image for " +
                                            vars::info(id).name);
            Monomial m;
            const Monomial& im = img.terms()[0].first;
            for (int k = 0; k < kMaxVars; ++k) {
                int v = im.e[k] * stored;
                if (v % 2 != 0) throw std::invalid_argument("substitute: inexact half power");
                m.e[k] = int16_t(v / 2);
            }
            r = Poly::monomial(m);
        } else {
            int k = half ? stored / 2 : stored;
            if (k >= 0) {
                r = img.pow(unsigned(k));
            } else {
                if (!img.is_monomial() || !img.terms()[0].second.is_unit())
                    throw std::invalid_argument("substitute: non-unit image for negatively exponentiated " +
                                                vars::info(id).name);
                Poly inv = Poly::monomial(img.terms()[0].first.inverse(),
                                          *GaussInt(1).div_exact(img.terms()[0].second));
                r = inv.pow(unsigned(-k));
            }
        }
        cache.emplace(key, r);
        return r;
    };
    Poly out;
    std::vector<Poly> parts;
    for (auto& [m, c] : p.terms()) {
        Monomial rest = m;
        Poly t = Poly::monomial(Monomial{}, c);
        for (auto& [id, img] : sigma) {
            if (!m.e[id]) continue;
            rest.e[id] = 0;
            t = t * power(id, img, m.e[id]);
        }
        parts.push_back(t.shifted(rest));
    }
    return sum_parallel(parts, 1);
}

GaussRat evaluate(const Poly& p, const Point& pt) {
    GaussRat total(0);
    for (auto& [m, c] : p.terms()) {
        GaussRat v(c);
        for (int k = 0; k < kMaxVars; ++k) {
            if (!m.e[k]) continue;
            auto it = pt.find(k);
            if (it == pt.end()) throw std::invalid_argument("evaluate: unassigned variable " + vars::info(k).name);
            int e = m.e[k];
            if (vars::is_half_unit(k)) {
                if (e % 2) throw std::invalid_argument("evaluate: half-integer exponent of " + vars::info(k).name);
                e /= 2;
            }
            v = v * pow(it->second, e);
        }
        total = total + v;
    }
    return total;
}

Poly sum_parallel(const std::vector<Poly>& parts, int workers) {
    if (parts.empty()) return Poly();
    // pairwise tree keeps merges balanced
    std::vector<Poly> level = parts;
    while (level.size() > 1) {
        std::vector<Poly> next((level.size() + 1) / 2);
        auto job = [&](size_t lo, size_t hi) {
            for (size_t k = lo; k < hi; ++k) {
                next[k] = level[2 * k];
                if (2 * k + 1 < level.size()) next[k] += level[2 * k + 1];
            }
        };
        size_t w = std::max(1, workers);
        if (w == 1 || next.size() < 8) {
            job(0, next.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (next.size() + w - 1) / w;
            for (size_t lo = 0; lo < next.size(); lo += chunk)
                pool.emplace_back(job, lo, std::min(next.size(), lo + chunk));
            for (auto& t : pool) t.join();
        }
        level = std::move(next);
    }
    return level[0];
}

// ---------------------------------------------------------------- rendering

std::string var_power_latex(int id, int e) {
    const VarInfo& v = vars::info(id);
    auto with_exp = [](const std::string& base, const std::string& ex) {
        return ex == "1" ? base : base + "^{" + ex + "}";
    };
    if (v.sym == Sym::x) {
        if (e % 2 == 0) return with_exp(v.latex, std::to_string(e / 2));
        return v.latex + "^{" + std::to_string(e) + "/2}";
    }
    if (v.sym == Sym::q || v.sym == Sym::qj) {
        std::string t = v.sym == Sym::q ? "t" : "t_{" + std::to_string(v.index) + "}";
        if (e % 2 == 0) return with_exp(t, std::to_string(e / 2));
        return with_exp(v.latex, std::to_string(e));
    }
    if (e == 1) return v.latex;
    return "\\left(" + v.latex + "\\right)^{" + std::to_string(e) + "}";
}

namespace {

std::string coeff_latex(const GaussInt& c) {
    if (c.im.is_zero()) return c.re.str();
    if (c.re.is_zero()) {
        if (c.im == 1) return "i";
        if (c.im == -1) return "-i";
        return c.im.str() + "i";
    }
    return "(" + c.str() + ")";
}

std::string render(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // ascending order reads naturally: constants first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (int k = 0; k < kMaxVars; ++k) {
            if (!m.e[k]) continue;
            if (!mono.empty()) mono += latex ? " " : "*";
            if (latex) {
                mono += var_power_latex(k, m.e[k]);
            } else {
                const VarInfo& v = vars::info(k);
                int e = m.e[k];
                mono += v.name;
                if (v.sym == Sym::x) {
                    if (e != 2) mono += "^" + (e % 2 ? "(" + std::to_string(e) + "/2)" : std::to_string(e / 2));
                } else if (e != 1) {
                    mono += "^" + std::to_string(e);
                }
            }
        }
        bool neg = c.im.is_zero() ? c.re < 0 : (c.re.is_zero() && c.im < 0);
        GaussInt mag = neg ? -c : c;
        std::string cs = latex ? coeff_latex(mag) : (mag.im.is_zero() || mag.re.is_zero() ? mag.str() : "(" + mag.str() + ")");
        std::string body;
        if (mono.empty()) body = cs;
        else if (mag.is_one()) body = mono;
        else body = cs + (latex ? " " : "*") + mono;
        if (first) out = (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

nlohmann::json int_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return (long long)v;
    return v.str();
}

BigInt json_int(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long long>());
}

}  // namespace

std::string to_latex(const Poly& p) { return render(p, true); }
std::string to_text(const Poly& p) { return render(p, false); }

nlohmann::json to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (int k = 0; k < kMaxVars; ++k)
            if (m.e[k]) mono[vars::info(k).name] = m.e[k];
        terms.push_back({{"coeff", {int_json(c.re), int_json(c.im)}}, {"monomial", mono}});
    }
    return {{"exponent_unit", "half"}, {"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
    std::vector<Poly::Term> terms;
    for (auto& t : j.at("terms")) {
        Monomial m;
        for (auto& [name, e] : t.at("monomial").items()) {
            auto id = vars::by_name(name);
            if (!id) throw std::invalid_argument("unknown variable " + name);
            m.e[*id] = int16_t(e.get<int>());
        }
        terms.emplace_back(m, GaussInt(json_int(t.at("coeff")[0]), json_int(t.at("coeff")[1])));
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace bentice
