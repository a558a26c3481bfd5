#include "ssmthom/param_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ssmthom {

ParamPoly::ParamPoly(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}

ParamPoly ParamPoly::variable(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty parameter name");
    ParamPoly p;
    p.terms_[{{name, 1}}] = Rational(1);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_value() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [name, e] : mb) m[name] += e;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

ParamPoly ParamPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    ParamPoly out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

ParamPoly ParamPoly::evaluate(const std::string& name, const Rational& value) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        Rational coeff = c;
        auto it = rest.find(name);
        if (it != rest.end()) {
            coeff *= rat_pow(value, static_cast<unsigned long>(it->second));
            rest.erase(it);
        }
        out.add_term(rest, coeff);
    }
    return out;
}

int ParamPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [name, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    // order: total degree descending, then monomial map order
    std::vector<const std::pair<const Monomial, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto total = [](const Monomial& m) {
        int d = 0;
        for (const auto& [n, e] : m) d += e;
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        return total(a->first) > total(b->first);
    });
    std::string out;
    bool first = true;
    for (auto* t : order) {
        const auto& [m, c] = *t;
        Rational a = abs(c);
        std::string sign = c < 0 ? "-" : "+";
        std::string body;
        if (a != 1 || m.empty()) body = rat_to_string(a);
        for (const auto& [name, e] : m) {
            if (!body.empty()) body += "*";
            body += name;
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (first) {
            out = (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += " " + sign + " " + body;
        }
    }
    return out;
}

}  // namespace ssmthom
