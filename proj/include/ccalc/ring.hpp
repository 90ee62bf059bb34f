#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccalc/errors.hpp"

namespace ccalc {

/// Exact integer coefficient type used throughout.
using Int = boost::multiprecision::cpp_int;

/// Sparse integer combination of basis monomials: basis index -> coefficient.
using Combination = std::map<int, Int>;

struct Generator {
    std::string name;
    int degree = 0;
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

/// A finite graded-commutative ring with integer coefficients, given by an
/// explicit monomial basis and a structure-constant table. Products whose
/// degree exceeds the truncation degree are zero. Construction validates the
/// full presentation (unitality, graded commutativity, associativity,
/// homogeneity, truncation, odd squares) and throws RingError on violation.
class RingPresentation {
public:
    RingPresentation(std::string name,
                     std::vector<Generator> generators,
                     std::vector<std::string> basis_names,
                     std::vector<int> basis_degrees,
                     const std::map<std::pair<int, int>, Combination>& products,
                     int truncation,
                     std::optional<int> fundamental);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return generators_; }
    int basis_size() const { return static_cast<int>(basis_names_.size()); }
    const std::string& basis_name(int i) const { return basis_names_.at(i); }
    int basis_degree(int i) const { return basis_degrees_.at(i); }
    int truncation() const { return truncation_; }
    std::optional<int> fundamental() const { return fundamental_; }
    int unit_index() const { return unit_; }

    /// Index of the basis monomial with the given name, or -1.
    int find_basis(const std::string& name) const;

    /// All basis indices of the given degree (ascending).
    std::vector<int> basis_of_degree(int degree) const;

    /// Structure constants for the ordered basis pair (i, j).
    const Combination& product(int i, int j) const { return table_[idx(i, j)]; }

    /// Bilinear extension of the table to combinations.
    Combination multiply(const Combination& a, const Combination& b) const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * basis_names_.size() + static_cast<std::size_t>(j);
    }
    void validate() const;

    std::string name_;
    std::vector<Generator> generators_;
    std::vector<std::string> basis_names_;
    std::vector<int> basis_degrees_;
    std::vector<Combination> table_;
    int truncation_ = 0;
    std::optional<int> fundamental_;
    int unit_ = -1;
};

// Preset rings. Parameters out of range raise RingError.
RingPtr point_ring();
RingPtr sphere_ring(int dim);     // Z[h]/(h^2), deg h = dim
RingPtr cp_ring(int n);           // Z[h]/(h^{n+1}), deg h = 2
RingPtr torus_ring(int k);        // exterior algebra on k degree-1 generators
RingPtr product_ring(const RingPtr& a, const RingPtr& b);  // tensor with Koszul signs

/// Parses preset shorthand: "point", "sphere(2)", "cp(2)", "torus(2)" and
/// '*'-separated products such as "sphere(2)*sphere(2)".
RingPtr parse_ring_preset(const std::string& text);

/// An element of the ring: finitely supported integer coefficients on basis
/// monomials. Values are immutable in spirit; all operations return copies.
class BaseClass {
public:
    explicit BaseClass(RingPtr ring) : ring_(std::move(ring)) {}
    BaseClass(RingPtr ring, Combination coeffs);

    static BaseClass unit(const RingPtr& ring);
    static BaseClass scalar(const RingPtr& ring, const Int& c);
    static BaseClass basis_element(const RingPtr& ring, int index, Int coeff = 1);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    const Combination& terms() const { return coeffs_; }
    Int coefficient(int basis_index) const;

    BaseClass homogeneous_component(int degree) const;
    /// True when every supported monomial has the given degree (zero passes).
    bool is_homogeneous_of(int degree) const;
    bool is_homogeneous() const;
    int max_degree() const;  // -1 for zero

    BaseClass operator-() const;
    BaseClass operator+(const BaseClass& o) const;
    BaseClass operator-(const BaseClass& o) const;
    BaseClass operator*(const BaseClass& o) const;
    BaseClass operator*(const Int& c) const;
    BaseClass& operator+=(const BaseClass& o) { return *this = *this + o; }
    BaseClass& operator-=(const BaseClass& o) { return *this = *this - o; }
    BaseClass& operator*=(const BaseClass& o) { return *this = *this * o; }
    bool operator==(const BaseClass& o) const;
    bool operator!=(const BaseClass& o) const { return !(*this == o); }

private:
    void require_same_ring(const BaseClass& o) const;

    RingPtr ring_;
    Combination coeffs_;
};

/// Pairing with the fundamental class: the coefficient of the fundamental
/// monomial. Throws ContractError when the ring has no fundamental class.
Int integrate(const BaseClass& a);

std::string to_string(const BaseClass& a);

}  // namespace ccalc
