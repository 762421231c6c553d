#pragma once

#include <vector>

#include "hirz/chow.hpp"
#include "hirz/symfunc.hpp"

namespace hirz {

// A locally free sheaf class on P^n: just its rank and total Chern class.
// Chern roots are never stored; linear-algebra operations expand them
// ephemerally through the symmetric-function engine and reduce back.
class BundleClass {
  public:
    BundleClass(int ambient, int rank, ChowClass chern);

    int ambient() const { return chern_.ambient(); }
    int rank() const { return rank_; }
    const ChowClass& chern() const { return chern_; }
    // c_k as a bare coefficient (of H^k) and as a graded class.
    const Rational& chern_coeff(int k) const { return chern_.part(k); }
    ChowClass chern_part(int k) const;

    friend bool operator==(const BundleClass& a, const BundleClass& b);

  private:
    int rank_;
    ChowClass chern_;
};

BundleClass line_bundle(int ambient, const Integer& d);
BundleClass trivial_bundle(int ambient, int rank);
BundleClass tangent_bundle(int ambient);

BundleClass direct_sum(const BundleClass& e, const BundleClass& f);
BundleClass dual(const BundleClass& e);
BundleClass determinant(const BundleClass& e);
BundleClass wedge(int k, const BundleClass& e);
BundleClass sym(int k, const BundleClass& e);
BundleClass tensor(const BundleClass& e, const BundleClass& f);

// Newton-identity route (default): power sums from the Chern coefficients.
ChowClass chern_character(const BundleClass& e);
ChowClass todd(const BundleClass& e);

// Root-expansion route through symroots; used as an independent cross-check.
ChowClass chern_character_roots(const BundleClass& e);
ChowClass todd_roots(const BundleClass& e);

ChowClass segre(const BundleClass& e);
Rational degree(const BundleClass& e);

// Substitute e_k of each group by c_k of the matching bundle (group sizes must
// equal bundle ranks, one bundle per group, shared ambient).
ChowClass evaluate_universal(const ElemPoly& x, const std::vector<BundleClass>& bundles);

}  // namespace hirz
