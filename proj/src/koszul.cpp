#include "hirz/koszul.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <utility>

#include "hirz/error.hpp"
#include "hirz/matrix.hpp"

namespace hirz {

namespace {

int total_degree(const std::vector<int>& exps) {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

}  // namespace

Poly::Poly(int num_vars) : nvars_(num_vars) {
    if (num_vars < 1) throw DomainError("polynomial ring needs at least one variable");
}

Poly Poly::constant(int num_vars, const Rational& c) {
    Poly p(num_vars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(num_vars), 0), c);
    return p;
}

Poly Poly::variable(int num_vars, int i) {
    if (i < 0 || i >= num_vars) throw DomainError("variable index out of range");
    Poly p(num_vars);
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, 1);
    return p;
}

void Poly::add_term(const std::vector<int>& exps, const Rational& c) {
    if (exps.size() != static_cast<std::size_t>(nvars_))
        throw DomainError("exponent vector length does not match the ring");
    for (int e : exps)
        if (e < 0) throw DomainError("exponents must be nonnegative");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

int Poly::degree() const {
    if (terms_.empty()) throw DomainError("the zero polynomial has no degree");
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw DomainError("operands live in different polynomial rings");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw DomainError("operands live in different polynomial rings");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator-(const Poly& a) {
    Poly r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("operands live in different polynomial rings");
    Poly r(a.nvars_);
    std::vector<int> e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly operator*(const Rational& c, Poly a) {
    if (c.is_zero()) return Poly(a.nvars_);
    for (auto& [e, v] : a.terms_) v *= c;
    return a;
}

Poly pow(const Poly& a, long e) {
    if (e < 0) throw DomainError("polynomial exponent must be nonnegative");
    Poly r = Poly::constant(a.num_vars(), 1);
    for (long i = 0; i < e; ++i) r = r * a;
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // reverse map order = descending lex on exponents, so x0-heavy terms lead
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->second.sign() < 0;
        const Rational abs = neg ? -it->second : it->second;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            const int e = it->first[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += abs.str();
        else if (abs == Rational(1))
            out += mono;
        else
            out += abs.str() + "*" + mono;
    }
    return out;
}

namespace {

class PolyParser {
  public:
    PolyParser(int num_vars, std::string_view text) : n_(num_vars), s_(text) {}

    Poly run() {
        Poly p = parse_expr();
        if (peek() != '\0') fail("'+', '-', '*', '^' or end of input");
        return p;
    }

  private:
    int n_;
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(pos_ + 1, expected,
                         "parse error at position " + std::to_string(pos_ + 1) + ": expected " +
                             expected);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Poly parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = parse_term();
        if (neg) p = Rational(-1) * p;
        while (true) {
            if (eat('+'))
                p += parse_term();
            else if (eat('-'))
                p -= parse_term();
            else
                return p;
        }
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    Poly parse_factor() {
        Poly p = parse_atom();
        if (eat('^')) p = hirz::pow(p, parse_exponent());
        return p;
    }

    Poly parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = parse_expr();
            if (!eat(')')) fail("')'");
            return p;
        }
        if (c == 'x') {
            const std::size_t at = pos_;
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("a variable index");
            const long idx = parse_exponent();  // same digit-run scan
            if (idx >= n_)
                throw ParseError(at + 1, "a variable among x0..x" + std::to_string(n_ - 1),
                                 "parse error at position " + std::to_string(at + 1) +
                                     ": expected a variable among x0..x" + std::to_string(n_ - 1));
            return Poly::variable(n_, static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return Poly::constant(n_, Rational(Integer(digits, 10)));
        }
        fail("an integer, a variable or '('");
    }

    long parse_exponent() {
        if (peek() == '\0' || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("a nonnegative integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("a smaller number");
            ++pos_;
        }
        return v;
    }
};

}  // namespace

Poly Poly::parse(int num_vars, std::string_view text) {
    if (num_vars < 1) throw DomainError("polynomial ring needs at least one variable");
    return PolyParser(num_vars, text).run();
}

GradedRing::GradedRing(int num_vars) : nvars_(num_vars) {
    if (num_vars < 1) throw DomainError("polynomial ring needs at least one variable");
}

HomogeneousSequence::HomogeneousSequence(GradedRing ring, std::vector<Poly> elements)
    : ring_(ring), elems_(std::move(elements)) {
    if (elems_.empty()) throw DomainError("sequence must be nonempty");
    degrees_.reserve(elems_.size());
    for (const Poly& p : elems_) {
        if (p.num_vars() != ring_.num_vars())
            throw DomainError("sequence element lives in a different ring");
        if (p.is_zero()) throw DomainError("sequence elements must be nonzero");
        if (!p.is_homogeneous())
            throw DomainError("sequence element " + p.str() + " is not homogeneous");
        if (p.degree() < 1)
            throw DomainError("sequence elements must have positive degree");
        degrees_.push_back(p.degree());
    }
}

KoszulReport::KoszulReport(int max_degree_in, std::vector<std::vector<long>> dims_in,
                           std::vector<std::vector<long>> chain_in)
    : max_degree(max_degree_in), dims(std::move(dims_in)), chain_dims(std::move(chain_in)) {
    if (max_degree < 0 || dims.empty() || dims.size() != chain_dims.size())
        throw InternalError("malformed koszul report");
    const std::size_t width = static_cast<std::size_t>(max_degree) + 1;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (dims[k].size() != width || chain_dims[k].size() != width)
            throw InternalError("malformed koszul report");
    for (std::size_t t = 0; t < width; ++t) {
        long chain = 0, hom = 0;
        long sign = 1;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            chain += sign * chain_dims[k][t];
            hom += sign * dims[k][t];
            sign = -sign;
        }
        if (chain != hom)
            throw InternalError("alternating sums of chain and homology dimensions disagree");
    }
}

namespace {

// column-major sparse matrix; each column lists (row, value) with unique rows
using Col = std::vector<std::pair<long, Rational>>;

struct SparseMat {
    long rows = 0;
    std::vector<Col> cols;
};

MatQ to_matq(const SparseMat& m) {
    MatQ a(static_cast<int>(m.rows), static_cast<int>(m.cols.size()));
    for (std::size_t c = 0; c < m.cols.size(); ++c)
        for (const auto& [r, v] : m.cols[c])
            a.at(static_cast<int>(r), static_cast<int>(c)) = v;
    return a;
}

long rank_of(const SparseMat& m) {
    if (m.rows == 0 || m.cols.empty()) return 0;
    return to_matq(m).rank();
}

void enum_monos(int m, int pos, int left, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (pos == m - 1) {
        cur[static_cast<std::size_t>(pos)] = left;
        out.push_back(cur);
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        enum_monos(m, pos + 1, left - e, cur, out);
    }
}

void enum_subsets(int d, int k, int start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= d - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        enum_subsets(d, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// All graded pieces of wedge^k A^d up to the degree horizon, the differentials
// between them, and exact ranks on demand.  Bases are wedge-subsets times ring
// monomials; a basis element is addressed as offset(subset) + monomial index.
class Engine {
  public:
    Engine(const HomogeneousSequence& seq, int max_degree)
        : seq_(seq), dlen_(seq.size()), dmax_(max_degree) {
        if (max_degree < 0) throw DomainError("degree bound must be nonnegative");
        const int m = seq_.num_vars();
        monos_.resize(static_cast<std::size_t>(dmax_) + 1);
        mindex_.resize(static_cast<std::size_t>(dmax_) + 1);
        for (int t = 0; t <= dmax_; ++t) {
            std::vector<int> cur(static_cast<std::size_t>(m), 0);
            enum_monos(m, 0, t, cur, monos_[t]);
            for (long i = 0; i < static_cast<long>(monos_[t].size()); ++i)
                mindex_[t].emplace(monos_[t][static_cast<std::size_t>(i)], i);
        }

        subsets_.resize(static_cast<std::size_t>(dlen_) + 1);
        sdeg_.resize(static_cast<std::size_t>(dlen_) + 1);
        spos_.resize(static_cast<std::size_t>(dlen_) + 1);
        for (int k = 0; k <= dlen_; ++k) {
            std::vector<int> cur;
            enum_subsets(dlen_, k, 0, cur, subsets_[k]);
            for (int i = 0; i < static_cast<int>(subsets_[k].size()); ++i) {
                int deg = 0;
                for (int e : subsets_[k][static_cast<std::size_t>(i)])
                    deg += seq_.degrees()[static_cast<std::size_t>(e)];
                sdeg_[k].push_back(deg);
                spos_[k].emplace(subsets_[k][static_cast<std::size_t>(i)], i);
            }
        }

        offsets_.assign(static_cast<std::size_t>(dlen_) + 1,
                        std::vector<std::vector<long>>(static_cast<std::size_t>(dmax_) + 1));
        dim_.assign(static_cast<std::size_t>(dlen_) + 1,
                    std::vector<long>(static_cast<std::size_t>(dmax_) + 1, 0));
        for (int k = 0; k <= dlen_; ++k)
            for (int t = 0; t <= dmax_; ++t)
                for (std::size_t s = 0; s < subsets_[k].size(); ++s) {
                    const int rdeg = t - sdeg_[k][s];
                    offsets_[k][t].push_back(rdeg < 0 ? -1 : dim_[k][t]);
                    if (rdeg >= 0) dim_[k][t] += static_cast<long>(monos_[rdeg].size());
                }

        mats_.assign(static_cast<std::size_t>(dlen_) + 1,
                     std::vector<SparseMat>(static_cast<std::size_t>(dmax_) + 1));
        rank_.assign(static_cast<std::size_t>(dlen_) + 2,
                     std::vector<long>(static_cast<std::size_t>(dmax_) + 1, -1));
        for (int k = 1; k <= dlen_; ++k)
            for (int t = 0; t <= dmax_; ++t) build_mat(k, t);
        for (int k = 2; k <= dlen_; ++k)
            for (int t = 0; t <= dmax_; ++t) check_dd(k, t);
    }

    long chain_dim(int k, int t) const { return dim_[k][t]; }

    long rank(int k, int t) {
        if (k < 1 || k > dlen_) return 0;
        long& r = rank_[k][t];
        if (r < 0) r = rank_of(mats_[k][t]);
        return r;
    }

    long homology_dim(int k, int t) { return dim_[k][t] - rank(k, t) - rank(k + 1, t); }

    KoszulReport report() {
        std::vector<std::vector<long>> dims(static_cast<std::size_t>(dlen_) + 1,
                                            std::vector<long>(static_cast<std::size_t>(dmax_) + 1));
        std::vector<std::vector<long>> chain = dims;
        for (int k = 0; k <= dlen_; ++k)
            for (int t = 0; t <= dmax_; ++t) {
                dims[k][t] = homology_dim(k, t);
                chain[k][t] = dim_[k][t];
            }
        return KoszulReport(dmax_, std::move(dims), std::move(chain));
    }

    bool annihilates(int k) {
        const int dtop = dmax_ - *std::max_element(seq_.degrees().begin(), seq_.degrees().end());
        for (int t = 0; t <= dtop; ++t) {
            const long hdim = homology_dim(k, t);
            if (hdim == 0) continue;
            for (const auto& rep : representatives(k, t, hdim))
                for (int j = 0; j < dlen_; ++j)
                    if (!is_boundary(k, t, j, rep)) return false;
        }
        return true;
    }

  private:
    const HomogeneousSequence& seq_;
    int dlen_;
    int dmax_;
    std::vector<std::vector<std::vector<int>>> monos_;        // per ring degree
    std::vector<std::map<std::vector<int>, long>> mindex_;    // per ring degree
    std::vector<std::vector<std::vector<int>>> subsets_;      // per k
    std::vector<std::vector<int>> sdeg_;                      // per k, subset degree
    std::vector<std::map<std::vector<int>, int>> spos_;       // per k
    std::vector<std::vector<std::vector<long>>> offsets_;     // [k][t][subset]
    std::vector<std::vector<long>> dim_;                      // [k][t]
    std::vector<std::vector<SparseMat>> mats_;                // [k][t], k >= 1
    std::vector<std::vector<long>> rank_;                     // cached, -1 unset

    void build_mat(int k, int t) {
        SparseMat& mat = mats_[k][t];
        mat.rows = dim_[k - 1][t];
        mat.cols.assign(static_cast<std::size_t>(dim_[k][t]), {});
        std::vector<int> sub(static_cast<std::size_t>(k - 1));
        for (std::size_t s = 0; s < subsets_[k].size(); ++s) {
            const int rdeg = t - sdeg_[k][s];
            if (rdeg < 0) continue;
            const std::vector<int>& set = subsets_[k][s];
            for (int j = 0; j < k; ++j) {
                const int i = set[static_cast<std::size_t>(j)];
                for (int l = 0, w = 0; l < k; ++l)
                    if (l != j) sub[static_cast<std::size_t>(w++)] = set[static_cast<std::size_t>(l)];
                const long base = offsets_[k - 1][t][static_cast<std::size_t>(spos_[k - 1].at(sub))];
                const int ndeg = rdeg + seq_.degrees()[static_cast<std::size_t>(i)];
                const bool neg = j % 2 != 0;
                for (long mu = 0; mu < static_cast<long>(monos_[rdeg].size()); ++mu) {
                    Col& col = mat.cols[static_cast<std::size_t>(offsets_[k][t][s] + mu)];
                    for (const auto& [aexp, ac] : seq_.elements()[static_cast<std::size_t>(i)].terms()) {
                        std::vector<int> nu = monos_[rdeg][static_cast<std::size_t>(mu)];
                        for (std::size_t v = 0; v < nu.size(); ++v) nu[v] += aexp[v];
                        col.emplace_back(base + mindex_[ndeg].at(nu), neg ? -ac : ac);
                    }
                }
            }
        }
    }

    void check_dd(int k, int t) {
        const SparseMat& hi = mats_[k][t];
        const SparseMat& lo = mats_[k - 1][t];
        for (const Col& c : hi.cols) {
            std::map<long, Rational> acc;
            for (const auto& [r, v] : c)
                for (const auto& [r2, v2] : lo.cols[static_cast<std::size_t>(r)]) acc[r2] += v * v2;
            for (const auto& [r2, v2] : acc)
                if (!v2.is_zero())
                    throw InternalError("koszul differential does not square to zero");
        }
    }

    // Cycles independent modulo the incoming boundaries, found by growing the
    // rank of [boundary columns | chosen cycles].
    std::vector<std::vector<Rational>> representatives(int k, int t, long hdim) {
        const std::vector<std::vector<Rational>> cycles = to_matq(mats_[k][t]).kernel_basis();
        const SparseMat* in = k + 1 <= dlen_ ? &mats_[k + 1][t] : nullptr;
        const long nb = in ? static_cast<long>(in->cols.size()) : 0;
        const long base_rank = rank(k + 1, t);
        std::vector<std::vector<Rational>> chosen;
        for (const auto& z : cycles) {
            if (static_cast<long>(chosen.size()) == hdim) break;
            MatQ m(static_cast<int>(dim_[k][t]),
                   static_cast<int>(nb + static_cast<long>(chosen.size()) + 1));
            if (in)
                for (std::size_t c = 0; c < in->cols.size(); ++c)
                    for (const auto& [r, v] : in->cols[c])
                        m.at(static_cast<int>(r), static_cast<int>(c)) = v;
            for (std::size_t c = 0; c < chosen.size(); ++c)
                for (long r = 0; r < dim_[k][t]; ++r)
                    m.at(static_cast<int>(r), static_cast<int>(nb + static_cast<long>(c))) =
                        chosen[c][static_cast<std::size_t>(r)];
            for (long r = 0; r < dim_[k][t]; ++r)
                m.at(static_cast<int>(r), static_cast<int>(nb) + static_cast<int>(chosen.size())) =
                    z[static_cast<std::size_t>(r)];
            if (m.rank() > base_rank + static_cast<long>(chosen.size())) chosen.push_back(z);
        }
        if (static_cast<long>(chosen.size()) != hdim)
            throw InternalError("homology representative count disagrees with its dimension");
        return chosen;
    }

    // Does a_j * rep land in the image of the incoming differential one degree
    // window up?
    bool is_boundary(int k, int t, int j, const std::vector<Rational>& rep) {
        const int tj = t + seq_.degrees()[static_cast<std::size_t>(j)];
        std::vector<Rational> w(static_cast<std::size_t>(dim_[k][tj]));
        for (std::size_t s = 0; s < subsets_[k].size(); ++s) {
            const int rdeg = t - sdeg_[k][s];
            if (rdeg < 0) continue;
            const int ndeg = rdeg + seq_.degrees()[static_cast<std::size_t>(j)];
            for (long mu = 0; mu < static_cast<long>(monos_[rdeg].size()); ++mu) {
                const Rational& c = rep[static_cast<std::size_t>(offsets_[k][t][s] + mu)];
                if (c.is_zero()) continue;
                for (const auto& [aexp, ac] : seq_.elements()[static_cast<std::size_t>(j)].terms()) {
                    std::vector<int> nu = monos_[rdeg][static_cast<std::size_t>(mu)];
                    for (std::size_t v = 0; v < nu.size(); ++v) nu[v] += aexp[v];
                    w[static_cast<std::size_t>(offsets_[k][tj][s] + mindex_[ndeg].at(nu))] += c * ac;
                }
            }
        }
        if (k + 1 > dlen_) {
            for (const Rational& v : w)
                if (!v.is_zero()) return false;
            return true;
        }
        return to_matq(mats_[k + 1][tj]).solvable(w);
    }
};

}  // namespace

KoszulReport koszul_homology(const HomogeneousSequence& seq, int max_degree) {
    return Engine(seq, max_degree).report();
}

bool is_regular_up_to(const HomogeneousSequence& seq, int max_degree) {
    const KoszulReport r = koszul_homology(seq, max_degree);
    for (std::size_t k = 1; k < r.dims.size(); ++k)
        for (long v : r.dims[k])
            if (v != 0) return false;
    return true;
}

std::vector<std::vector<long>> tor_dimensions(const HomogeneousSequence& seq, int max_degree) {
    const KoszulReport r = koszul_homology(seq, max_degree);
    for (std::size_t k = 1; k < r.dims.size(); ++k)
        for (long v : r.dims[k])
            if (v != 0)
                throw DomainError(
                    "sequence is not certified regular up to the degree bound; the Koszul "
                    "complex computes Tor only for regular sequences");
    // after tensoring with A/I every differential vanishes: Tor_k is a sum of
    // copies of A/I shifted by the subset degrees
    const std::vector<long>& hilb = r.dims[0];
    std::vector<std::vector<long>> tor(static_cast<std::size_t>(seq.size()) + 1,
                                       std::vector<long>(static_cast<std::size_t>(max_degree) + 1, 0));
    for (int k = 0; k <= seq.size(); ++k) {
        std::vector<std::vector<int>> subs;
        std::vector<int> cur;
        enum_subsets(seq.size(), k, 0, cur, subs);
        for (const auto& set : subs) {
            int ds = 0;
            for (int i : set) ds += seq.degrees()[static_cast<std::size_t>(i)];
            for (int t = ds; t <= max_degree; ++t)
                tor[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] +=
                    hilb[static_cast<std::size_t>(t - ds)];
        }
    }
    return tor;
}

bool annihilation_check(const HomogeneousSequence& seq, int k, int max_degree) {
    if (k < 1) throw DomainError("homology index must be at least 1");
    if (max_degree < 0) throw DomainError("degree bound must be nonnegative");
    if (k > seq.size()) return true;  // wedge^k of a rank-d module vanishes
    return Engine(seq, max_degree).annihilates(k);
}

bool euler_identity_check(const HomogeneousSequence& seq, int max_degree) {
    const KoszulReport r = koszul_homology(seq, max_degree);
    for (int t = 0; t <= max_degree; ++t) {
        long chain = 0, hom = 0;
        long sign = 1;
        for (std::size_t k = 0; k < r.dims.size(); ++k) {
            chain += sign * r.chain_dims[k][static_cast<std::size_t>(t)];
            hom += sign * r.dims[k][static_cast<std::size_t>(t)];
            sign = -sign;
        }
        if (chain != hom) return false;
    }
    return true;
}

}  // namespace hirz
