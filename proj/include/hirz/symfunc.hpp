#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hirz/chow.hpp"
#include "hirz/rational.hpp"

namespace hirz {

// Formal Chern roots come in named groups, one group per bundle.
struct RootGroup {
    std::string label;
    int size;
};

class RootSystem {
  public:
    explicit RootSystem(std::vector<RootGroup> groups);

    int group_count() const { return static_cast<int>(groups_.size()); }
    const RootGroup& group(int g) const { return groups_.at(static_cast<std::size_t>(g)); }
    int group_offset(int g) const { return offsets_.at(static_cast<std::size_t>(g)); }
    int total_roots() const { return total_; }

    friend bool operator==(const RootSystem& a, const RootSystem& b);

  private:
    std::vector<RootGroup> groups_;
    std::vector<int> offsets_;
    int total_ = 0;
};

// Exponent vector over the flattened variable slots of a RootSystem.
using Exps = std::vector<int>;

// Polynomial in the roots, truncated by total degree across all roots jointly.
// Terms beyond the truncation are dropped on every operation; zero
// coefficients are never stored.
class RootPoly {
  public:
    RootPoly(RootSystem sys, int truncation);  // zero polynomial
    static RootPoly constant(RootSystem sys, int truncation, const Rational& c);
    static RootPoly root(RootSystem sys, int truncation, int group, int index);

    const RootSystem& system() const { return sys_; }
    int truncation() const { return trunc_; }
    const std::map<Exps, Rational>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rational& c);  // accumulate, drop zeros

    bool is_zero() const { return terms_.empty(); }
    std::string str() const;

    RootPoly& operator+=(const RootPoly& o);
    RootPoly& operator-=(const RootPoly& o);
    friend RootPoly operator+(RootPoly a, const RootPoly& b) { return a += b; }
    friend RootPoly operator-(RootPoly a, const RootPoly& b) { return a -= b; }
    friend RootPoly operator*(const RootPoly& a, const RootPoly& b);
    friend RootPoly operator*(const Rational& c, RootPoly p);
    friend bool operator==(const RootPoly& a, const RootPoly& b);

  private:
    RootSystem sys_;
    int trunc_;
    std::map<Exps, Rational> terms_;

    void check_compatible(const RootPoly& o) const;
};

// e_k of one group's roots, as a RootPoly; e_0 = 1.
RootPoly elementary_symmetric(const RootSystem& sys, int truncation, int group, int k);

// Polynomial in the elementary symmetric variables e_k^{(g)}.  Slot (g, i)
// of the exponent vector holds e_{i+1} of group g, so e_k carries weighted
// degree k; truncation bounds the total weighted degree.
class ElemPoly {
  public:
    ElemPoly(RootSystem sys, int truncation);
    static ElemPoly constant(RootSystem sys, int truncation, const Rational& c);
    static ElemPoly e(RootSystem sys, int truncation, int group, int k);  // 1 ≤ k ≤ size

    const RootSystem& system() const { return sys_; }
    int truncation() const { return trunc_; }
    const std::map<Exps, Rational>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rational& c);

    // Substitute each e_k by the k-th elementary symmetric polynomial of its
    // group's roots; recovers the reduced input up to truncation.
    RootPoly expand_roots() const;

    bool is_zero() const { return terms_.empty(); }
    std::string str() const;

    ElemPoly& operator+=(const ElemPoly& o);
    ElemPoly& operator-=(const ElemPoly& o);
    friend ElemPoly operator+(ElemPoly a, const ElemPoly& b) { return a += b; }
    friend ElemPoly operator-(ElemPoly a, const ElemPoly& b) { return a -= b; }
    friend ElemPoly operator*(const ElemPoly& a, const ElemPoly& b);
    friend ElemPoly operator*(const Rational& c, ElemPoly p);
    friend bool operator==(const ElemPoly& a, const ElemPoly& b);

  private:
    RootSystem sys_;
    int trunc_;
    std::map<Exps, Rational> terms_;

    void check_compatible(const ElemPoly& o) const;
};

// Classical leading-term subtraction in lexicographic order, one group at a
// time (other groups' roots ride along as coefficients).  The input must be
// invariant under root permutations within every group; a violating
// transposition is reported otherwise.
ElemPoly reduce_to_elementaries(const RootPoly& p);

// Substitute chern(g, k) — the codimension-k part of group g's total Chern
// class — for e_k^{(g)} and evaluate in the Chow ring of the given ambient.
ChowClass evaluate_expansion(const ElemPoly& x, int ambient,
                             const std::function<ChowClass(int group, int k)>& chern);

}  // namespace hirz
