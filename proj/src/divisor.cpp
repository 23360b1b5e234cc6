#include "tropcurve/divisor.hpp"

#include <sstream>

namespace tropcurve {

Divisor::Divisor(const Model& m, std::map<Point, Int> coeffs)
    : model_(&m), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0) it = coeffs_.erase(it);
        else ++it;
    }
}

Int Divisor::coeff(const Point& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Int(0) : it->second;
}

Int Divisor::degree() const {
    Int d = 0;
    for (const auto& [p, c] : coeffs_) d += c;
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [p, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

std::vector<Point> Divisor::support() const {
    std::vector<Point> s;
    for (const auto& [p, c] : coeffs_) s.push_back(p);
    return s;
}

Divisor Divisor::plus(const Divisor& other) const {
    if (model_ != other.model_) throw std::invalid_argument("divisor model mismatch");
    std::map<Point, Int> c = coeffs_;
    for (const auto& [p, k] : other.coeffs_) c[p] += k;
    return Divisor(*model_, std::move(c));
}

Divisor Divisor::minus(const Divisor& other) const {
    if (model_ != other.model_) throw std::invalid_argument("divisor model mismatch");
    std::map<Point, Int> c = coeffs_;
    for (const auto& [p, k] : other.coeffs_) c[p] -= k;
    return Divisor(*model_, std::move(c));
}

Divisor Divisor::with(const Point& p, const Int& delta) const {
    std::map<Point, Int> c = coeffs_;
    c[p] += delta;
    return Divisor(*model_, std::move(c));
}

std::string Divisor::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
        if (!first) os << " + ";
        if (c != 1) os << c.str() << "*";
        os << p.str();
        first = false;
    }
    return os.str();
}

Int degree(const Divisor& d) { return d.degree(); }
bool is_effective(const Divisor& d) { return d.is_effective(); }

Divisor canonical_divisor(const Model& m) {
    std::map<Point, Int> c;
    for (int v = 0; v < m.num_vertices(); ++v) {
        Int k = m.valence(v) - 2;
        if (k != 0) c[Point::vertex(v)] = k;
    }
    return Divisor(m, std::move(c));
}

Divisor apply_automorphism(const Divisor& d, const Automorphism& sigma) {
    if (&d.model() != &sigma.base_model())
        throw std::invalid_argument("apply_automorphism: model mismatch");
    std::map<Point, Int> c;
    for (const auto& [p, k] : d.coeffs()) c[act_on_point(sigma, p)] += k;
    return Divisor(d.model(), std::move(c));
}

bool is_invariant(const Divisor& d, const Automorphism& sigma) {
    return apply_automorphism(d, sigma) == d;
}

bool is_invariant(const Divisor& d, const FiniteGroup& g) {
    for (const Automorphism& sigma : g.elements())
        if (!is_invariant(d, sigma)) return false;
    return true;
}

} // namespace tropcurve
