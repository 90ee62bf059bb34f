#pragma once

#include "ccalc/epoly.hpp"
#include "ccalc/ring.hpp"

namespace ccalc {

/// A complex virtual bundle presented by its rank (any sign) and total Chern
/// class. The total Chern class has degree-0 part 1 and is supported in even
/// degrees only.
class VirtualBundle {
public:
    VirtualBundle(int rank, BaseClass total_chern);

    static VirtualBundle trivial(const RingPtr& ring, int rank) {
        return VirtualBundle(rank, BaseClass::unit(ring));
    }

    const RingPtr& ring() const { return chern_.ring(); }
    int rank() const { return rank_; }
    const BaseClass& total_chern() const { return chern_; }
    BaseClass chern_class(int j) const { return chern_.homogeneous_component(2 * j); }

    /// Genuine bundle: non-negative rank and Chern classes vanishing above it.
    bool is_genuine() const;

    bool operator==(const VirtualBundle& o) const {
        return rank_ == o.rank_ && chern_ == o.chern_;
    }

private:
    int rank_;
    BaseClass chern_;
};

/// An oriented real bundle presented by its rank and Euler class; the Euler
/// class is homogeneous of degree equal to the rank, and a rank-0 bundle has
/// Euler class 1.
class OrientedRealBundle {
public:
    OrientedRealBundle(int rank, BaseClass euler);

    static OrientedRealBundle trivial_rank0(const RingPtr& ring) {
        return OrientedRealBundle(0, BaseClass::unit(ring));
    }

    const RingPtr& ring() const { return euler_.ring(); }
    int rank() const { return rank_; }
    const BaseClass& euler() const { return euler_; }

private:
    int rank_;
    BaseClass euler_;
};

/// Inverse of a class with degree-0 part 1, exact in the truncated ring.
BaseClass invert_unit_series(const BaseClass& c);

/// Total Segre class: the unique unit-leading-term inverse of the total Chern
/// class, so that c(V) s(V) = 1 holds exactly.
BaseClass total_segre(const VirtualBundle& v);

/// Degree-2l component of the total Segre class.
BaseClass segre_class(const VirtualBundle& v, int l);

/// Whitney sum / difference: ranks add or subtract; total Chern classes
/// multiply (using the Segre class of the subtrahend).
VirtualBundle bundle_sum(const VirtualBundle& v, const VirtualBundle& w);
VirtualBundle bundle_difference(const VirtualBundle& v, const VirtualBundle& w);

/// n(n-1)...(n-k+1)/k!, exact, for any integer n and k >= 0.
Int generalized_binomial(const Int& n, int k);

/// j-th Segre class of D (x) L_t for a degree-2 twist class t:
///   s_j(D (x) L_t) = sum_{l=0..j} C(-rank(D)-l, j-l) s_l(D) t^{j-l}.
EquivPoly twist_segre(const VirtualBundle& d, int j, const EquivPoly& twist);

/// Equivariant Euler class of a genuine bundle with equivariant parameter t:
///   sum_{j=0..a} c_j(V) t^{a-j}, monic of t-degree a = rank(V).
EquivPoly equivariant_euler(const VirtualBundle& v, const EquivPoly& t);

/// Laurent expansion of the inverse equivariant Euler class:
///   sum_{k>=0} s_k(V (x) L_shift) (sign*y)^{-rank-k}.
/// The series terminates by nilpotency when `shift` is a base-ring class; the
/// default max_index then covers it. A shift involving the free generators x
/// or y requires an explicit max_index (callers supply the bound at which the
/// reduced classes of their quotient model vanish).
EquivPoly inverse_equivariant_euler(const VirtualBundle& v, int sign, const EquivPoly& shift,
                                    int max_index = -1);

}  // namespace ccalc
