#include "ccalc/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ccalc {

namespace {

void strip_zeros(Combination& c) {
    for (auto it = c.begin(); it != c.end();) {
        if (it->second == 0)
            it = c.erase(it);
        else
            ++it;
    }
}

int koszul_sign(int deg_a, int deg_b) {
    return (deg_a % 2 != 0 && deg_b % 2 != 0) ? -1 : 1;
}

}  // namespace

RingPresentation::RingPresentation(std::string name,
                                   std::vector<Generator> generators,
                                   std::vector<std::string> basis_names,
                                   std::vector<int> basis_degrees,
                                   const std::map<std::pair<int, int>, Combination>& products,
                                   int truncation,
                                   std::optional<int> fundamental)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      basis_names_(std::move(basis_names)),
      basis_degrees_(std::move(basis_degrees)),
      truncation_(truncation),
      fundamental_(fundamental) {
    const int n = static_cast<int>(basis_names_.size());
    if (n == 0)
        throw RingError("ring '" + name_ + "': empty basis");
    if (basis_degrees_.size() != basis_names_.size())
        throw RingError("ring '" + name_ + "': basis name/degree size mismatch");
    table_.assign(static_cast<std::size_t>(n) * n, Combination{});
    for (const auto& [key, comb] : products) {
        auto [i, j] = key;
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw RingError("ring '" + name_ + "': product entry with basis index out of range");
        Combination c = comb;
        strip_zeros(c);
        for (const auto& [k, v] : c) {
            (void)v;
            if (k < 0 || k >= n)
                throw RingError("ring '" + name_ + "': product result index out of range");
        }
        table_[idx(i, j)] = std::move(c);
    }
    validate();
}

void RingPresentation::validate() const {
    const int n = basis_size();
    auto& self = const_cast<RingPresentation&>(*this);

    if (truncation_ < 0)
        throw RingError("ring '" + name_ + "': negative truncation degree");
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        if (basis_names_[i].empty())
            throw RingError("ring '" + name_ + "': empty basis monomial name");
        if (!seen.insert(basis_names_[i]).second)
            throw RingError("ring '" + name_ + "': duplicate basis monomial '" + basis_names_[i] + "'");
        if (basis_degrees_[i] < 0 || basis_degrees_[i] > truncation_)
            throw RingError("ring '" + name_ + "': basis monomial '" + basis_names_[i] +
                            "' has degree outside [0, truncation]");
    }

    // Locate the unit: a degree-0 monomial acting as a two-sided identity.
    self.unit_ = -1;
    for (int u = 0; u < n; ++u) {
        if (basis_degrees_[u] != 0)
            continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            Combination expect{{v, 1}};
            if (product(u, v) != expect || product(v, u) != expect)
                ok = false;
        }
        if (ok) {
            self.unit_ = u;
            break;
        }
    }
    if (unit_ < 0)
        throw RingError("ring '" + name_ + "': no degree-0 basis monomial acts as a unit");

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Combination& p = product(i, j);
            const int dsum = basis_degrees_[i] + basis_degrees_[j];
            // homogeneity of structure constants
            for (const auto& [k, v] : p) {
                (void)v;
                if (basis_degrees_[k] != dsum)
                    throw RingError("ring '" + name_ + "': product " + basis_names_[i] + "*" +
                                    basis_names_[j] + " is not homogeneous of degree " +
                                    std::to_string(dsum));
            }
            // truncation
            if (dsum > truncation_ && !p.empty())
                throw RingError("ring '" + name_ + "': product " + basis_names_[i] + "*" +
                                basis_names_[j] + " exceeds the truncation degree but is nonzero");
            // graded commutativity
            Combination q = product(j, i);
            if (koszul_sign(basis_degrees_[i], basis_degrees_[j]) < 0)
                for (auto& [k, v] : q) (void)k, v = -v;
            if (p != q)
                throw RingError("ring '" + name_ + "': graded commutativity fails for pair (" +
                                basis_names_[i] + ", " + basis_names_[j] + ")");
        }
        // odd-degree monomials square to zero
        if (basis_degrees_[i] % 2 != 0 && !product(i, i).empty())
            throw RingError("ring '" + name_ + "': odd-degree monomial '" + basis_names_[i] +
                            "' has nonzero square");
    }

    // associativity on basis triples, via bilinear extension
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Combination& ij = product(i, j);
            for (int k = 0; k < n; ++k) {
                Combination left = multiply(ij, Combination{{k, 1}});
                Combination right = multiply(Combination{{i, 1}}, product(j, k));
                if (left != right)
                    throw RingError("ring '" + name_ + "': associativity fails on triple (" +
                                    basis_names_[i] + ", " + basis_names_[j] + ", " +
                                    basis_names_[k] + ")");
            }
        }
    }

    if (fundamental_) {
        if (*fundamental_ < 0 || *fundamental_ >= n)
            throw RingError("ring '" + name_ + "': fundamental index out of range");
        if (basis_degrees_[*fundamental_] != truncation_)
            throw RingError("ring '" + name_ + "': fundamental class must have degree equal to the truncation degree");
    }
}

int RingPresentation::find_basis(const std::string& name) const {
    for (int i = 0; i < basis_size(); ++i)
        if (basis_names_[i] == name)
            return i;
    return -1;
}

std::vector<int> RingPresentation::basis_of_degree(int degree) const {
    std::vector<int> out;
    for (int i = 0; i < basis_size(); ++i)
        if (basis_degrees_[i] == degree)
            out.push_back(i);
    return out;
}

Combination RingPresentation::multiply(const Combination& a, const Combination& b) const {
    Combination out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b)
            for (const auto& [k, ck] : product(i, j)) {
                Int& slot = out[k];
                slot += ci * cj * ck;
            }
    strip_zeros(out);
    return out;
}

// ---------------------------------------------------------------------------
// presets

namespace {

void fill_unit_products(std::map<std::pair<int, int>, Combination>& t, int unit, int n) {
    for (int v = 0; v < n; ++v) {
        t[{unit, v}] = Combination{{v, 1}};
        t[{v, unit}] = Combination{{v, 1}};
    }
}

}  // namespace

RingPtr point_ring() {
    std::map<std::pair<int, int>, Combination> t;
    fill_unit_products(t, 0, 1);
    return std::make_shared<RingPresentation>("point", std::vector<Generator>{},
                                              std::vector<std::string>{"1"}, std::vector<int>{0},
                                              t, 0, 0);
}

RingPtr sphere_ring(int dim) {
    if (dim < 1)
        throw RingError("sphere(" + std::to_string(dim) + "): dimension must be >= 1");
    std::map<std::pair<int, int>, Combination> t;
    fill_unit_products(t, 0, 2);
    t[{1, 1}] = Combination{};  // h^2 lands above the truncation
    return std::make_shared<RingPresentation>(
        "sphere(" + std::to_string(dim) + ")", std::vector<Generator>{{"h", dim}},
        std::vector<std::string>{"1", "h"}, std::vector<int>{0, dim}, t, dim, 1);
}

RingPtr cp_ring(int n) {
    if (n < 1)
        throw RingError("cp(" + std::to_string(n) + "): parameter must be >= 1");
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 0; i <= n; ++i) {
        names.push_back(i == 0 ? "1" : (i == 1 ? "h" : "h^" + std::to_string(i)));
        degrees.push_back(2 * i);
    }
    std::map<std::pair<int, int>, Combination> t;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            t[{i, j}] = (i + j <= n) ? Combination{{i + j, 1}} : Combination{};
    return std::make_shared<RingPresentation>("cp(" + std::to_string(n) + ")",
                                              std::vector<Generator>{{"h", 2}}, names, degrees, t,
                                              2 * n, n);
}

RingPtr torus_ring(int k) {
    if (k < 1)
        throw RingError("torus(" + std::to_string(k) + "): parameter must be >= 1");
    if (k > 16)
        throw RingError("torus(" + std::to_string(k) + "): parameter too large");
    const int n = 1 << k;
    std::vector<Generator> gens;
    for (int g = 0; g < k; ++g)
        gens.push_back({"u" + std::to_string(g + 1), 1});
    std::vector<std::string> names(n);
    std::vector<int> degrees(n);
    for (int m = 0; m < n; ++m) {
        std::string s;
        int deg = 0;
        for (int g = 0; g < k; ++g)
            if (m & (1 << g)) {
                if (!s.empty())
                    s += "*";
                s += gens[g].name;
                ++deg;
            }
        names[m] = s.empty() ? "1" : s;
        degrees[m] = deg;
    }
    std::map<std::pair<int, int>, Combination> t;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a & b) {
                t[{a, b}] = Combination{};  // repeated odd generator
                continue;
            }
            // sign of the shuffle sorting (word of a, word of b) into a|b:
            // one transposition per pair (g in a, h in b) with g > h.
            int inversions = 0;
            for (int g = 0; g < k; ++g)
                if (a & (1 << g))
                    for (int h = 0; h < g; ++h)
                        if (b & (1 << h))
                            ++inversions;
            t[{a, b}] = Combination{{a | b, (inversions % 2 == 0) ? 1 : -1}};
        }
    return std::make_shared<RingPresentation>("torus(" + std::to_string(k) + ")", gens, names,
                                              degrees, t, k, n - 1);
}

RingPtr product_ring(const RingPtr& a, const RingPtr& b) {
    const int na = a->basis_size();
    const int nb = b->basis_size();

    // Disambiguate clashing names from the right factor by appending primes.
    std::set<std::string> taken;
    for (int i = 0; i < na; ++i)
        taken.insert(a->basis_name(i));
    std::vector<std::string> bnames(nb);
    for (int j = 0; j < nb; ++j) {
        std::string s = b->basis_name(j);
        if (s != "1")
            while (taken.count(s)) s += "'";
        taken.insert(s);
        bnames[j] = s;
    }

    auto combine_name = [&](int i, int j) -> std::string {
        const std::string& l = a->basis_name(i);
        const std::string& r = bnames[j];
        if (l == "1")
            return r;  // covers r == "1" giving "1"
        if (r == "1")
            return l;
        return l + "*" + r;
    };

    const int n = na * nb;
    std::vector<std::string> names(n);
    std::vector<int> degrees(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            names[i * nb + j] = combine_name(i, j);
            degrees[i * nb + j] = a->basis_degree(i) + b->basis_degree(j);
        }

    std::map<std::pair<int, int>, Combination> t;
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    // (u1 (x) w1)(u2 (x) w2) = (-1)^{|w1||u2|} u1u2 (x) w1w2
                    const int sign = koszul_sign(b->basis_degree(j1), a->basis_degree(i2));
                    Combination out;
                    for (const auto& [ia, ca] : a->product(i1, i2))
                        for (const auto& [jb, cb] : b->product(j1, j2)) {
                            Int& slot = out[ia * nb + jb];
                            slot += ca * cb * sign;
                        }
                    strip_zeros(out);
                    t[{i1 * nb + j1, i2 * nb + j2}] = std::move(out);
                }

    std::vector<Generator> gens = a->generators();
    std::set<std::string> gnames;
    for (const auto& g : gens)
        gnames.insert(g.name);
    for (const auto& g : b->generators()) {
        std::string s = g.name;
        while (gnames.count(s)) s += "'";
        gnames.insert(s);
        gens.push_back({s, g.degree});
    }

    std::optional<int> fundamental;
    if (a->fundamental() && b->fundamental())
        fundamental = *a->fundamental() * nb + *b->fundamental();

    return std::make_shared<RingPresentation>(a->name() + "*" + b->name(), gens, names, degrees, t,
                                              a->truncation() + b->truncation(), fundamental);
}

RingPtr parse_ring_preset(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t')
            continue;
        if (c == '*') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    auto parse_atom = [](const std::string& s) -> RingPtr {
        auto open = s.find('(');
        std::string head = (open == std::string::npos) ? s : s.substr(0, open);
        int param = 0;
        bool has_param = false;
        if (open != std::string::npos) {
            if (s.back() != ')')
                throw RingError("preset '" + s + "': missing ')'");
            std::string inner = s.substr(open + 1, s.size() - open - 2);
            try {
                std::size_t used = 0;
                param = std::stoi(inner, &used);
                if (used != inner.size())
                    throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw RingError("preset '" + s + "': parameter is not an integer");
            }
            has_param = true;
        }
        if (head == "point") {
            if (has_param)
                throw RingError("preset 'point' takes no parameter");
            return point_ring();
        }
        if (head == "sphere")
            return sphere_ring(has_param ? param : -1);
        if (head == "cp")
            return cp_ring(has_param ? param : -1);
        if (head == "torus")
            return torus_ring(has_param ? param : -1);
        throw RingError("unknown ring preset '" + s + "'");
    };

    RingPtr r;
    for (const auto& p : parts) {
        if (p.empty())
            throw RingError("empty factor in ring preset '" + text + "'");
        RingPtr atom = parse_atom(p);
        r = r ? product_ring(r, atom) : atom;
    }
    return r;
}

// ---------------------------------------------------------------------------
// BaseClass

BaseClass::BaseClass(RingPtr ring, Combination coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    const int n = ring_->basis_size();
    for (const auto& [k, v] : coeffs_) {
        (void)v;
        if (k < 0 || k >= n)
            throw RingError("class references a basis index outside the ring basis");
    }
    strip_zeros(coeffs_);
}

BaseClass BaseClass::unit(const RingPtr& ring) {
    return BaseClass(ring, Combination{{ring->unit_index(), 1}});
}

BaseClass BaseClass::scalar(const RingPtr& ring, const Int& c) {
    if (c == 0)
        return BaseClass(ring);
    return BaseClass(ring, Combination{{ring->unit_index(), c}});
}

BaseClass BaseClass::basis_element(const RingPtr& ring, int index, Int coeff) {
    return BaseClass(ring, Combination{{index, std::move(coeff)}});
}

Int BaseClass::coefficient(int basis_index) const {
    auto it = coeffs_.find(basis_index);
    return it == coeffs_.end() ? Int(0) : it->second;
}

BaseClass BaseClass::homogeneous_component(int degree) const {
    Combination out;
    for (const auto& [k, v] : coeffs_)
        if (ring_->basis_degree(k) == degree)
            out[k] = v;
    return BaseClass(ring_, std::move(out));
}

bool BaseClass::is_homogeneous_of(int degree) const {
    for (const auto& [k, v] : coeffs_) {
        (void)v;
        if (ring_->basis_degree(k) != degree)
            return false;
    }
    return true;
}

bool BaseClass::is_homogeneous() const {
    if (coeffs_.empty())
        return true;
    return is_homogeneous_of(ring_->basis_degree(coeffs_.begin()->first));
}

int BaseClass::max_degree() const {
    int d = -1;
    for (const auto& [k, v] : coeffs_) {
        (void)v;
        d = std::max(d, ring_->basis_degree(k));
    }
    return d;
}

void BaseClass::require_same_ring(const BaseClass& o) const {
    if (ring_.get() != o.ring_.get())
        throw RingError("mismatched rings: '" + ring_->name() + "' vs '" + o.ring_->name() + "'");
}

BaseClass BaseClass::operator-() const {
    Combination out = coeffs_;
    for (auto& [k, v] : out) (void)k, v = -v;
    return BaseClass(ring_, std::move(out));
}

BaseClass BaseClass::operator+(const BaseClass& o) const {
    require_same_ring(o);
    Combination out = coeffs_;
    for (const auto& [k, v] : o.coeffs_) {
        Int& slot = out[k];
        slot += v;
    }
    strip_zeros(out);
    return BaseClass(ring_, std::move(out));
}

BaseClass BaseClass::operator-(const BaseClass& o) const { return *this + (-o); }

BaseClass BaseClass::operator*(const BaseClass& o) const {
    require_same_ring(o);
    return BaseClass(ring_, ring_->multiply(coeffs_, o.coeffs_));
}

BaseClass BaseClass::operator*(const Int& c) const {
    Combination out;
    if (c != 0)
        for (const auto& [k, v] : coeffs_)
            out[k] = v * c;
    return BaseClass(ring_, std::move(out));
}

bool BaseClass::operator==(const BaseClass& o) const {
    return ring_.get() == o.ring_.get() && coeffs_ == o.coeffs_;
}

Int integrate(const BaseClass& a) {
    const auto f = a.ring()->fundamental();
    if (!f)
        throw ContractError("ring '" + a.ring()->name() + "' has no fundamental class");
    return a.coefficient(*f);
}

std::string to_string(const BaseClass& a) {
    if (a.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : a.terms()) {
        Int av = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0)
                out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        const bool is_unit = (k == a.ring()->unit_index());
        if (is_unit) {
            out << av.str();
        } else {
            if (av != 1)
                out << av.str() << "*";
            out << a.ring()->basis_name(k);
        }
    }
    return out.str();
}

}  // namespace ccalc
