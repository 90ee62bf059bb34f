#include "ccalc/epoly.hpp"

#include <atomic>
#include <sstream>

namespace ccalc {

namespace {
std::atomic<int> g_laurent_floor{-1024};
}

int laurent_guard_floor() { return g_laurent_floor.load(); }
void set_laurent_guard_floor(int floor) { g_laurent_floor.store(floor); }

EquivPoly EquivPoly::monomial(const BaseClass& b, int x_exp, int y_exp) {
    EquivPoly p(b.ring());
    p.insert_term(x_exp, y_exp, b);
    return p;
}

void EquivPoly::insert_term(int x_exp, int y_exp, const BaseClass& b) {
    if (x_exp < 0)
        throw ContractError("negative x-exponent");
    if (y_exp < laurent_guard_floor())
        throw LaurentGuardError("y-exponent " + std::to_string(y_exp) +
                                " fell below the Laurent guard floor " +
                                std::to_string(laurent_guard_floor()));
    if (b.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(Key{x_exp, y_exp}, b);
    if (!inserted) {
        it->second += b;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void EquivPoly::require_same_ring(const EquivPoly& o) const {
    if (ring_.get() != o.ring_.get())
        throw RingError("mismatched rings: '" + ring_->name() + "' vs '" + o.ring_->name() + "'");
}

bool EquivPoly::polynomial_in_y() const {
    for (const auto& [k, v] : terms_) {
        (void)v;
        if (k.y < 0)
            return false;
    }
    return true;
}

int EquivPoly::y_floor() const {
    int f = 0;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        (void)v;
        if (first || k.y < f)
            f = k.y;
        first = false;
    }
    return f;
}

int EquivPoly::x_degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_) {
        (void)v;
        if (k.x > d)
            d = k.x;
    }
    return d;
}

BaseClass EquivPoly::coefficient(int x_exp, int y_exp) const {
    auto it = terms_.find(Key{x_exp, y_exp});
    return it == terms_.end() ? BaseClass(ring_) : it->second;
}

EquivPoly EquivPoly::x_coefficient(int x_exp) const {
    EquivPoly out(ring_);
    for (const auto& [k, v] : terms_)
        if (k.x == x_exp)
            out.insert_term(0, k.y, v);
    return out;
}

EquivPoly EquivPoly::operator-() const {
    EquivPoly out(ring_);
    for (const auto& [k, v] : terms_)
        out.terms_.emplace(k, -v);
    return out;
}

EquivPoly EquivPoly::operator+(const EquivPoly& o) const {
    require_same_ring(o);
    EquivPoly out = *this;
    for (const auto& [k, v] : o.terms_)
        out.insert_term(k.x, k.y, v);
    return out;
}

EquivPoly EquivPoly::operator-(const EquivPoly& o) const { return *this + (-o); }

EquivPoly EquivPoly::operator*(const EquivPoly& o) const {
    require_same_ring(o);
    EquivPoly out(ring_);
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_)
            out.insert_term(ka.x + kb.x, ka.y + kb.y, va * vb);
    return out;
}

EquivPoly EquivPoly::operator*(const BaseClass& b) const {
    EquivPoly out(ring_);
    for (const auto& [k, v] : terms_)
        out.insert_term(k.x, k.y, v * b);
    return out;
}

EquivPoly EquivPoly::operator*(const Int& c) const {
    EquivPoly out(ring_);
    for (const auto& [k, v] : terms_)
        out.insert_term(k.x, k.y, v * c);
    return out;
}

bool EquivPoly::operator==(const EquivPoly& o) const {
    return ring_.get() == o.ring_.get() && terms_ == o.terms_;
}

EquivPoly EquivPoly::pow(int n) const {
    if (n < 0)
        throw ContractError("negative power of a polynomial");
    EquivPoly acc = unit(ring_);
    for (int i = 0; i < n; ++i)
        acc *= *this;
    return acc;
}

EquivPoly EquivPoly::shifted(int dx, int dy) const {
    EquivPoly out(ring_);
    for (const auto& [k, v] : terms_)
        out.insert_term(k.x + dx, k.y + dy, v);
    return out;
}

EquivPoly EquivPoly::substitute_x(const EquivPoly& t) const {
    require_same_ring(t);
    // Horner evaluation in x.
    EquivPoly acc(ring_);
    for (int d = x_degree(); d >= 0; --d) {
        acc = acc * t;
        acc += x_coefficient(d);
    }
    return acc;
}

std::pair<EquivPoly, bool> EquivPoly::eval_y_zero() const {
    EquivPoly slice(ring_);
    bool nonpolynomial = false;
    for (const auto& [k, v] : terms_) {
        if (k.y == 0)
            slice.insert_term(k.x, 0, v);
        else if (k.y < 0)
            nonpolynomial = true;
    }
    return {slice, nonpolynomial};
}

bool EquivPoly::is_homogeneous(int* degree) const {
    bool have = false;
    int deg = 0;
    for (const auto& [k, v] : terms_)
        for (const auto& [b, c] : v.terms()) {
            (void)c;
            const int d = 2 * k.x + 2 * k.y + ring_->basis_degree(b);
            if (!have) {
                deg = d;
                have = true;
            } else if (d != deg) {
                return false;
            }
        }
    if (have && degree)
        *degree = deg;
    return true;
}

std::string to_string(const EquivPoly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : p.terms())
        for (const auto& [b, c] : v.terms()) {
            Int av = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0)
                    out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            std::string factors;
            if (b != p.ring()->unit_index())
                factors += p.ring()->basis_name(b);
            if (k.x != 0) {
                if (!factors.empty())
                    factors += "*";
                factors += (k.x == 1) ? "x" : "x^" + std::to_string(k.x);
            }
            if (k.y != 0) {
                if (!factors.empty())
                    factors += "*";
                factors += (k.y == 1) ? "y" : "y^" + std::to_string(k.y);
            }
            if (factors.empty()) {
                out << av.str();
            } else {
                if (av != 1)
                    out << av.str() << "*";
                out << factors;
            }
        }
    return out.str();
}

}  // namespace ccalc
