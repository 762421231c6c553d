#include "hirz/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hirz/error.hpp"

namespace hirz {

RootSystem::RootSystem(std::vector<RootGroup> groups) : groups_(std::move(groups)) {
    std::set<std::string> seen;
    for (const auto& g : groups_) {
        if (g.label.empty()) throw DomainError("root group label must be nonempty");
        if (g.size < 0) throw DomainError("root group size must be >= 0");
        if (!seen.insert(g.label).second) throw DomainError("duplicate root group label '" + g.label + "'");
        offsets_.push_back(total_);
        total_ += g.size;
    }
}

bool operator==(const RootSystem& a, const RootSystem& b) {
    if (a.groups_.size() != b.groups_.size()) return false;
    for (std::size_t i = 0; i < a.groups_.size(); ++i)
        if (a.groups_[i].label != b.groups_[i].label || a.groups_[i].size != b.groups_[i].size) return false;
    return true;
}

namespace {

int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

template <typename Self>
void generic_add(Self& self, std::map<Exps, Rational>& terms, const Exps& e, const Rational& c, int degree,
                 int trunc) {
    if (c.is_zero() || degree > trunc) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    (void)self;
}

}  // namespace

RootPoly::RootPoly(RootSystem sys, int truncation) : sys_(std::move(sys)), trunc_(truncation) {
    if (truncation < 0) throw DomainError("truncation must be >= 0");
}

RootPoly RootPoly::constant(RootSystem sys, int truncation, const Rational& c) {
    RootPoly p(std::move(sys), truncation);
    p.add_term(Exps(static_cast<std::size_t>(p.sys_.total_roots()), 0), c);
    return p;
}

RootPoly RootPoly::root(RootSystem sys, int truncation, int group, int index) {
    RootPoly p(std::move(sys), truncation);
    if (group < 0 || group >= p.sys_.group_count()) throw DomainError("root group index out of range");
    if (index < 0 || index >= p.sys_.group(group).size) throw DomainError("root index out of range");
    Exps e(static_cast<std::size_t>(p.sys_.total_roots()), 0);
    e[static_cast<std::size_t>(p.sys_.group_offset(group) + index)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void RootPoly::add_term(const Exps& e, const Rational& c) {
    if (static_cast<int>(e.size()) != sys_.total_roots()) throw DomainError("exponent vector length mismatch");
    generic_add(*this, terms_, e, c, total_degree(e), trunc_);
}

void RootPoly::check_compatible(const RootPoly& o) const {
    if (!(sys_ == o.sys_) || trunc_ != o.trunc_)
        throw DomainError("root polynomials live over different systems or truncations");
}

RootPoly& RootPoly::operator+=(const RootPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

RootPoly& RootPoly::operator-=(const RootPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

RootPoly operator*(const RootPoly& a, const RootPoly& b) {
    a.check_compatible(b);
    RootPoly r(a.sys_, a.trunc_);
    const std::size_t width = static_cast<std::size_t>(a.sys_.total_roots());
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > a.trunc_) continue;
            Exps e(width);
            for (std::size_t i = 0; i < width; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

RootPoly operator*(const Rational& c, RootPoly p) {
    if (c.is_zero()) return RootPoly(p.sys_, p.trunc_);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
}

bool operator==(const RootPoly& a, const RootPoly& b) {
    return a.sys_ == b.sys_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

RootPoly elementary_symmetric(const RootSystem& sys, int truncation, int group, int k) {
    if (group < 0 || group >= sys.group_count()) throw DomainError("root group index out of range");
    const int r = sys.group(group).size;
    if (k < 0 || k > r)
        throw DomainError("elementary symmetric index " + std::to_string(k) + " out of range for group of size " +
                          std::to_string(r));
    RootPoly p(sys, truncation);
    const int off = sys.group_offset(group);
    // Enumerate k-subsets of the group's roots.
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Exps e(static_cast<std::size_t>(sys.total_roots()), 0);
        for (int i : idx) e[static_cast<std::size_t>(off + i)] = 1;
        p.add_term(e, Rational(1));
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return p;
}

ElemPoly::ElemPoly(RootSystem sys, int truncation) : sys_(std::move(sys)), trunc_(truncation) {
    if (truncation < 0) throw DomainError("truncation must be >= 0");
}

ElemPoly ElemPoly::constant(RootSystem sys, int truncation, const Rational& c) {
    ElemPoly p(std::move(sys), truncation);
    p.add_term(Exps(static_cast<std::size_t>(p.sys_.total_roots()), 0), c);
    return p;
}

ElemPoly ElemPoly::e(RootSystem sys, int truncation, int group, int k) {
    ElemPoly p(std::move(sys), truncation);
    if (group < 0 || group >= p.sys_.group_count()) throw DomainError("root group index out of range");
    if (k < 1 || k > p.sys_.group(group).size) throw DomainError("elementary symmetric index out of range");
    Exps ex(static_cast<std::size_t>(p.sys_.total_roots()), 0);
    ex[static_cast<std::size_t>(p.sys_.group_offset(group) + k - 1)] = 1;
    p.add_term(ex, Rational(1));
    return p;
}

namespace {

// Weighted degree of an e-variable exponent vector: slot (g, i) weighs i+1.
int weighted_degree(const RootSystem& sys, const Exps& e) {
    int d = 0;
    for (int g = 0; g < sys.group_count(); ++g) {
        const int off = sys.group_offset(g);
        for (int i = 0; i < sys.group(g).size; ++i) d += (i + 1) * e[static_cast<std::size_t>(off + i)];
    }
    return d;
}

}  // namespace

void ElemPoly::add_term(const Exps& e, const Rational& c) {
    if (static_cast<int>(e.size()) != sys_.total_roots()) throw DomainError("exponent vector length mismatch");
    generic_add(*this, terms_, e, c, weighted_degree(sys_, e), trunc_);
}

void ElemPoly::check_compatible(const ElemPoly& o) const {
    if (!(sys_ == o.sys_) || trunc_ != o.trunc_)
        throw DomainError("expansions live over different systems or truncations");
}

ElemPoly& ElemPoly::operator+=(const ElemPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ElemPoly& ElemPoly::operator-=(const ElemPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ElemPoly operator*(const ElemPoly& a, const ElemPoly& b) {
    a.check_compatible(b);
    ElemPoly r(a.sys_, a.trunc_);
    const std::size_t width = static_cast<std::size_t>(a.sys_.total_roots());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exps e(width);
            for (std::size_t i = 0; i < width; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

ElemPoly operator*(const Rational& c, ElemPoly p) {
    if (c.is_zero()) return ElemPoly(p.sys_, p.trunc_);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
}

bool operator==(const ElemPoly& a, const ElemPoly& b) {
    return a.sys_ == b.sys_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

RootPoly ElemPoly::expand_roots() const {
    RootPoly acc(sys_, trunc_);
    for (const auto& [ex, c] : terms_) {
        RootPoly term = RootPoly::constant(sys_, trunc_, c);
        for (int g = 0; g < sys_.group_count(); ++g) {
            const int off = sys_.group_offset(g);
            for (int i = 0; i < sys_.group(g).size; ++i) {
                const int m = ex[static_cast<std::size_t>(off + i)];
                for (int rep = 0; rep < m; ++rep) term = term * elementary_symmetric(sys_, trunc_, g, i + 1);
            }
        }
        acc += term;
    }
    return acc;
}

namespace {

// --- reduction internals ------------------------------------------------

// Extract the sub-vector of exponents belonging to group g.
Exps group_part(const RootSystem& sys, const Exps& e, int g) {
    const int off = sys.group_offset(g), r = sys.group(g).size;
    return Exps(e.begin() + off, e.begin() + off + r);
}

// Check symmetry under each adjacent transposition within each group.
void check_symmetric(const RootPoly& p) {
    const RootSystem& sys = p.system();
    for (int g = 0; g < sys.group_count(); ++g) {
        const int off = sys.group_offset(g), r = sys.group(g).size;
        for (int i = 0; i + 1 < r; ++i) {
            for (const auto& [e, c] : p.terms()) {
                Exps swapped = e;
                std::swap(swapped[static_cast<std::size_t>(off + i)], swapped[static_cast<std::size_t>(off + i + 1)]);
                auto it = p.terms().find(swapped);
                const Rational other = (it == p.terms().end()) ? Rational(0) : it->second;
                if (other != c)
                    throw DomainError("polynomial is not symmetric in group '" + sys.group(g).label +
                                      "': swapping roots " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                      " changes a coefficient");
            }
        }
    }
}

// Product of e_k^{mult[k-1]} for one group of size r, expanded in that group's
// roots alone (exponent vectors of length r).  Homogeneous, so no truncation
// is ever exercised here.
std::map<Exps, Rational> expand_e_monomial(int r, const Exps& mult) {
    // Elementary symmetric e_k over r local variables.
    auto elem = [&](int k) {
        std::map<Exps, Rational> out;
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Exps e(static_cast<std::size_t>(r), 0);
            for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
            out[e] = Rational(1);
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        return out;
    };
    std::map<Exps, Rational> acc;
    acc[Exps(static_cast<std::size_t>(r), 0)] = Rational(1);
    for (int k = 1; k <= r; ++k) {
        for (int rep = 0; rep < mult[static_cast<std::size_t>(k - 1)]; ++rep) {
            std::map<Exps, Rational> ek = elem(k), next;
            for (const auto& [ea, ca] : acc)
                for (const auto& [eb, cb] : ek) {
                    Exps e(static_cast<std::size_t>(r));
                    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                    auto [it, fresh] = next.emplace(e, ca * cb);
                    if (!fresh) it->second += ca * cb;
                }
            acc = std::move(next);
        }
    }
    return acc;
}

bool lex_less(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Reduce a polynomial in one group's roots (local exponent vectors) to a
// polynomial in that group's e-variables (local, weight k at slot k-1).
std::map<Exps, Rational> reduce_one_group(int r, std::map<Exps, Rational> q) {
    std::map<Exps, Rational> out;
    while (!q.empty()) {
        auto lead = q.begin();
        for (auto it = std::next(q.begin()); it != q.end(); ++it)
            if (lex_less(lead->first, it->first)) lead = it;
        const Exps lambda = lead->first;
        const Rational c = lead->second;
        for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
            if (lambda[i] < lambda[i + 1])
                throw InternalError("leading exponent of a symmetric polynomial is not weakly decreasing");
        Exps mult(static_cast<std::size_t>(r), 0);
        for (int k = 0; k < r; ++k) {
            const int cur = lambda[static_cast<std::size_t>(k)];
            const int nxt = (k + 1 < r) ? lambda[static_cast<std::size_t>(k + 1)] : 0;
            mult[static_cast<std::size_t>(k)] = cur - nxt;
        }
        for (const auto& [e, v] : expand_e_monomial(r, mult)) {
            auto it = q.find(e);
            const Rational nv = (it == q.end() ? Rational(0) : it->second) - c * v;
            if (it != q.end()) q.erase(it);
            if (!nv.is_zero()) q[e] = nv;
        }
        auto [it, fresh] = out.emplace(mult, c);
        if (!fresh) it->second += c;
    }
    return out;
}

}  // namespace

ElemPoly reduce_to_elementaries(const RootPoly& p) {
    check_symmetric(p);
    const RootSystem& sys = p.system();
    const int width = sys.total_roots();

    // Working terms: root exponents and e-variable exponents side by side.
    using Key = std::pair<Exps, Exps>;
    std::map<Key, Rational> work;
    for (const auto& [e, c] : p.terms()) work[{e, Exps(static_cast<std::size_t>(width), 0)}] = c;

    for (int g = 0; g < sys.group_count(); ++g) {
        const int off = sys.group_offset(g), r = sys.group(g).size;
        if (r == 0) continue;
        // Bucket by everything outside group g's root slots.
        std::map<Key, std::map<Exps, Rational>> buckets;
        for (const auto& [key, c] : work) {
            Exps outside = key.first;
            for (int i = 0; i < r; ++i) outside[static_cast<std::size_t>(off + i)] = 0;
            buckets[{outside, key.second}][group_part(sys, key.first, g)] += c;
        }
        std::map<Key, Rational> next;
        for (const auto& [outer, q] : buckets) {
            for (const auto& [mult, c] : reduce_one_group(r, q)) {
                Key key = outer;
                for (int i = 0; i < r; ++i) key.second[static_cast<std::size_t>(off + i)] += mult[static_cast<std::size_t>(i)];
                auto [it, fresh] = next.emplace(key, c);
                if (!fresh) it->second += c;
            }
        }
        work = std::move(next);
    }

    ElemPoly out(sys, p.truncation());
    for (const auto& [key, c] : work) {
        for (int v : key.first)
            if (v != 0) throw InternalError("unreduced root exponent after reduction");
        out.add_term(key.second, c);
    }
    return out;
}

ChowClass evaluate_expansion(const ElemPoly& x, int ambient,
                             const std::function<ChowClass(int group, int k)>& chern) {
    const RootSystem& sys = x.system();
    ChowClass acc(ambient);
    for (const auto& [ex, c] : x.terms()) {
        ChowClass term = c * ChowClass::unit(ambient);
        for (int g = 0; g < sys.group_count(); ++g) {
            const int off = sys.group_offset(g);
            for (int i = 0; i < sys.group(g).size; ++i) {
                const int m = ex[static_cast<std::size_t>(off + i)];
                for (int rep = 0; rep < m; ++rep) term = term * chern(g, i + 1);
            }
        }
        acc += term;
    }
    return acc;
}

std::string RootPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c.str();
        for (int g = 0; g < sys_.group_count(); ++g)
            for (int i = 0; i < sys_.group(g).size; ++i) {
                const int m = e[static_cast<std::size_t>(sys_.group_offset(g) + i)];
                if (m == 0) continue;
                os << "*" << sys_.group(g).label << i + 1;
                if (m > 1) os << "^" << m;
            }
        first = false;
    }
    return os.str();
}

std::string ElemPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c.str();
        for (int g = 0; g < sys_.group_count(); ++g)
            for (int i = 0; i < sys_.group(g).size; ++i) {
                const int m = e[static_cast<std::size_t>(sys_.group_offset(g) + i)];
                if (m == 0) continue;
                os << "*e" << i + 1 << "(" << sys_.group(g).label << ")";
                if (m > 1) os << "^" << m;
            }
        first = false;
    }
    return os.str();
}

}  // namespace hirz
