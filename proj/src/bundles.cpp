#include "ccalc/bundles.hpp"

namespace ccalc {

VirtualBundle::VirtualBundle(int rank, BaseClass total_chern)
    : rank_(rank), chern_(std::move(total_chern)) {
    if (chern_.homogeneous_component(0) != BaseClass::unit(chern_.ring()))
        throw ContractError("total Chern class must have degree-0 part equal to 1");
    for (const auto& [k, v] : chern_.terms()) {
        (void)v;
        if (chern_.ring()->basis_degree(k) % 2 != 0)
            throw ContractError("total Chern class must be supported in even degrees");
    }
}

bool VirtualBundle::is_genuine() const {
    if (rank_ < 0)
        return false;
    for (const auto& [k, v] : chern_.terms()) {
        (void)v;
        if (ring()->basis_degree(k) > 2 * rank_)
            return false;
    }
    return true;
}

OrientedRealBundle::OrientedRealBundle(int rank, BaseClass euler)
    : rank_(rank), euler_(std::move(euler)) {
    if (rank_ < 0)
        throw ContractError("oriented real bundle rank must be non-negative");
    if (rank_ == 0) {
        if (euler_ != BaseClass::unit(euler_.ring()))
            throw ContractError("rank-0 oriented real bundle must have Euler class 1");
    } else if (!euler_.is_homogeneous_of(rank_)) {
        throw ContractError("Euler class must be homogeneous of degree equal to the rank");
    }
}

BaseClass invert_unit_series(const BaseClass& c) {
    const RingPtr& ring = c.ring();
    if (c.homogeneous_component(0) != BaseClass::unit(ring))
        throw ContractError("series inversion requires degree-0 part equal to 1");
    // 1/(1 + r) = sum (-r)^k; r is nilpotent in the truncated ring.
    const BaseClass r = BaseClass::unit(ring) - c;
    BaseClass acc = BaseClass::unit(ring);
    BaseClass term = BaseClass::unit(ring);
    for (int k = 0; k <= ring->truncation(); ++k) {
        term *= r;
        if (term.is_zero())
            break;
        acc += term;
    }
    return acc;
}

BaseClass total_segre(const VirtualBundle& v) { return invert_unit_series(v.total_chern()); }

BaseClass segre_class(const VirtualBundle& v, int l) {
    if (l < 0)
        throw ContractError("Segre class index must be >= 0");
    return total_segre(v).homogeneous_component(2 * l);
}

VirtualBundle bundle_sum(const VirtualBundle& v, const VirtualBundle& w) {
    return VirtualBundle(v.rank() + w.rank(), v.total_chern() * w.total_chern());
}

VirtualBundle bundle_difference(const VirtualBundle& v, const VirtualBundle& w) {
    return VirtualBundle(v.rank() - w.rank(), v.total_chern() * total_segre(w));
}

Int generalized_binomial(const Int& n, int k) {
    if (k < 0)
        throw ContractError("binomial index k must be >= 0");
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: C(n,i)*(n-i) = C(n,i+1)*(i+1)
    }
    return r;
}

EquivPoly twist_segre(const VirtualBundle& d, int j, const EquivPoly& twist) {
    if (j < 0)
        throw ContractError("twisted Segre index must be >= 0");
    int tdeg = 0;
    if (!twist.is_zero() && (!twist.is_homogeneous(&tdeg) || tdeg != 2))
        throw ContractError("twist class must be homogeneous of total degree 2");
    const BaseClass s = total_segre(d);
    EquivPoly out(d.ring());
    for (int l = 0; l <= j; ++l) {
        const BaseClass sl = s.homogeneous_component(2 * l);
        if (sl.is_zero())
            continue;
        const Int binom = generalized_binomial(Int(-d.rank()) - l, j - l);
        if (binom == 0)
            continue;
        out += twist.pow(j - l) * sl * binom;
    }
    return out;
}

EquivPoly equivariant_euler(const VirtualBundle& v, const EquivPoly& t) {
    if (v.rank() < 0)
        throw ContractError("equivariant Euler class needs rank >= 0; expand the inverse via Segre classes for virtual ranks");
    EquivPoly out(v.ring());
    for (int j = 0; j <= v.rank(); ++j) {
        const BaseClass cj = v.chern_class(j);
        if (!cj.is_zero())
            out += t.pow(v.rank() - j) * cj;
    }
    return out;
}

EquivPoly inverse_equivariant_euler(const VirtualBundle& v, int sign, const EquivPoly& shift,
                                    int max_index) {
    if (sign != 1 && sign != -1)
        throw ContractError("sign must be +1 or -1");
    int kmax = max_index;
    if (kmax < 0) {
        // A base-ring shift keeps every term nilpotent; the series then stops
        // at half the truncation degree on its own.
        const bool base_only = shift.is_zero() || (shift.x_degree() <= 0 && shift.y_floor() == 0 &&
                                                   shift.coefficient(0, 0) == shift.terms().begin()->second &&
                                                   shift.terms().size() == 1 &&
                                                   shift.terms().begin()->first == EquivPoly::Key{0, 0});
        if (!base_only)
            throw ContractError("inverse Euler expansion with a non-base shift needs an explicit max_index");
        kmax = v.ring()->truncation() / 2;
    }
    EquivPoly out(v.ring());
    for (int k = 0; k <= kmax; ++k) {
        EquivPoly term = twist_segre(v, k, shift);
        if (term.is_zero())
            continue;
        const int e = -v.rank() - k;
        if (sign == -1 && ((v.rank() + k) % 2 != 0))
            term = -term;
        out += term.shifted(0, e);
    }
    return out;
}

}  // namespace ccalc
