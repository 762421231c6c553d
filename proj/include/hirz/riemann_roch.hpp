#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hirz/bundle.hpp"
#include "hirz/ktheory.hpp"

namespace hirz {

// A bundle class together with (when available) its class in K_0(P^n).  Only
// the constructors that are honest K_0 operations propagate the K-class:
// line, sum, tensor, dual.  Everything else (wedge, sym, the tangent bundle)
// yields an untracked bundle, so chi via K-theory refuses instead of silently
// recomputing the left-hand side from the right-hand side.
struct TrackedBundle {
    BundleClass bundle;
    std::optional<KClass> kclass;

    explicit TrackedBundle(BundleClass b) : bundle(std::move(b)) {}
    TrackedBundle(BundleClass b, KClass k);
};

TrackedBundle tracked_line(int ambient, const Integer& d);
TrackedBundle tracked_sum(const TrackedBundle& e, const TrackedBundle& f);
TrackedBundle tracked_tensor(const TrackedBundle& e, const TrackedBundle& f);
TrackedBundle tracked_dual(const TrackedBundle& e);

// td(T_{P^n}) computed directly as the (n+1)-st power of the one-variable
// Todd series; agrees with todd(tangent_bundle(n)), which goes through the
// Chern classes instead.
ChowClass todd_of_projective_space(int n);

struct HrrReport {
    Integer lhs;   // chi from the tracked K-class
    Rational rhs;  // integral of ch(E) * td(P^n)
    bool equal;
};

// The two sides of chi(P^n, E) = integral of ch(E)*td(T_{P^n}), computed
// independently and compared exactly.  Throws UnsupportedError when E carries
// no K-class.
HrrReport hrr_check(const TrackedBundle& e);

// chi(P^n, O(d)) by counting monomials: H^0 for d >= 0, H^n through duality
// with O(-n-1) for d <= -n-1, everything zero in between.  Deliberately avoids
// the binomial-coefficient shortcut used by euler_char.
Integer cohomology_oracle(int n, long d);

// Third route to chi(P^n, O(d)): the residue of e^{dx} dx / (1-e^{-x})^{n+1}
// after substituting y = 1 - e^{-x}, which collapses to the coefficient of
// y^n in (1-y)^{-d-1}.
Rational hrr_rhs_residue(int n, const Integer& d);

class CurveContext {
  public:
    explicit CurveContext(long genus);
    long genus() const { return genus_; }

  private:
    long genus_;
};

// chi(C, E) = deg(E) + rank(E) * (1 - g).
Integer curve_chi(const CurveContext& ctx, long rank, const Integer& deg);

// A smooth projective surface, reduced to the numbers the surface formulas
// consume: a divisor basis with its intersection pairing, the canonical class
// in that basis, and the integral of c_2 of the tangent bundle.
class SurfaceContext {
  public:
    SurfaceContext(std::vector<std::string> basis_names,
                   std::vector<std::vector<Integer>> pairing,
                   std::vector<Integer> canonical, Integer c2_integral);

    const std::vector<std::string>& basis_names() const { return names_; }
    const std::vector<std::vector<Integer>>& pairing() const { return pairing_; }
    const std::vector<Integer>& canonical() const { return canonical_; }
    const Integer& c2_integral() const { return c2_; }
    std::size_t basis_size() const { return names_.size(); }

    Integer intersect(const std::vector<Integer>& a, const std::vector<Integer>& b) const;

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<Integer>> pairing_;
    std::vector<Integer> canonical_;
    Integer c2_;
};

// chi(S, O_S) = (K^2 + c_2) / 12.
Integer noether_chi(const SurfaceContext& ctx);

// chi(S, O(D)) = (D.D - D.K)/2 + chi(S, O_S).  The value is returned as a
// Rational but must be an integer; a half-integer means the supplied
// intersection data violates adjunction and is rejected.
Rational surface_chi(const SurfaceContext& ctx, const std::vector<Integer>& d);

}  // namespace hirz
