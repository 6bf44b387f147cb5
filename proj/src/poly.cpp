#include "freecurve/poly.hpp"

#include <algorithm>
#include <map>

#include "freecurve/errors.hpp"

namespace freecurve {

namespace {
const char* kVarNames[3] = {"x", "y", "z"};
}

std::string Monomial::str() const {
    if (degree() == 0) return "1";
    std::string s;
    for (int k = 0; k < 3; ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += kVarNames[k];
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

Poly::Poly(const FieldId& f, std::vector<Term> terms) : field_(f), terms_(std::move(terms)) {
    normalize();
}

void Poly::normalize() {
    for (const Term& t : terms_) {
        if (!(t.c.field() == field_)) throw FieldMismatch("term coefficient field differs from polynomial field");
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return b.m < a.m; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
    hom_degree_ = -1;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        int d = static_cast<int>(terms_[i].m.degree());
        if (i == 0)
            hom_degree_ = d;
        else if (hom_degree_ != d)
            hom_degree_ = -2;
    }
}

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, c});
    p.normalize();
    return p;
}

Poly Poly::monomial(const Scalar& c, const Monomial& m) {
    Poly p(c.field());
    if (!c.is_zero()) p.terms_.push_back(Term{m, c});
    p.normalize();
    return p;
}

Poly Poly::variable(const FieldId& f, int var) {
    Monomial m;
    m.e[var] = 1;
    return monomial(Scalar::one(f), m);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.front().m.degree());  // leading term has max degree in grevlex
}

int Poly::homogeneous_degree() const {
    if (hom_degree_ == -2) throw NonHomogeneous("polynomial is not homogeneous: " + str());
    return hom_degree_;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw Refusal("zero polynomial has no leading term");
    return terms_.front();
}

Poly Poly::operator+(const Poly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    Poly r(field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m == o.terms_[j].m) {
            Scalar c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back(Term{terms_[i].m, c});
            ++i, ++j;
        } else if (terms_[i].m > o.terms_[j].m) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    r.normalize();
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.m, -t.c});
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    std::map<Monomial, Scalar> acc;
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Monomial m = a.m * b.m;
            Scalar c = a.c * b.c;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else
                it->second += c;
        }
    }
    Poly r(field_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back(Term{m, c});
    r.normalize();
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    if (!(field_ == c.field())) throw FieldMismatch();
    if (c.is_zero()) return Poly(field_);
    Poly r(field_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.m, t.c * c});
    r.normalize();
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = Poly::constant(Scalar::one(field_));
    Poly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Poly Poly::partial(int var) const {
    Poly r(field_);
    for (const Term& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Monomial m = t.m;
        Scalar c = t.c * Scalar::of_int(field_, static_cast<long>(m.e[var]));
        m.e[var] -= 1;
        if (!c.is_zero()) r.terms_.push_back(Term{m, c});
    }
    r.normalize();
    return r;
}

std::array<Poly, 3> Poly::gradient() const { return {partial(0), partial(1), partial(2)}; }

Scalar Poly::evaluate(const std::array<Scalar, 3>& point) const {
    for (const Scalar& s : point)
        if (!(s.field() == field_)) throw FieldMismatch("evaluation point in a different field");
    // Cache coordinate powers up to the needed exponent.
    std::array<std::vector<Scalar>, 3> pw;
    for (int k = 0; k < 3; ++k) pw[k].push_back(Scalar::one(field_));
    auto power = [&](int k, std::uint32_t e) {
        while (pw[k].size() <= e) pw[k].push_back(pw[k].back() * point[k]);
        return pw[k][e];
    };
    Scalar acc = Scalar::zero(field_);
    for (const Term& t : terms_) {
        Scalar v = t.c;
        for (int k = 0; k < 3; ++k)
            if (t.m.e[k]) v *= power(k, t.m.e[k]);
        acc += v;
    }
    return acc;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (!(field_ == d.field_)) throw FieldMismatch();
    if (d.is_zero()) throw DivisionByZero();
    Poly rem = *this;
    Poly quot(field_);
    const Term& lt = d.leading_term();
    Scalar lt_inv = lt.c.inverse();
    while (!rem.is_zero()) {
        const Term& r = rem.leading_term();
        if (!lt.m.divides(r.m)) return std::nullopt;
        Poly q = Poly::monomial(r.c * lt_inv, r.m / lt.m);
        quot = quot + q;
        rem = rem - q * d;
    }
    return quot;
}

Scalar Poly::coefficient(const Monomial& m) const {
    // terms_ descending: binary search.
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return key < t.m; });
    if (it != terms_.end() && it->m == m) return it->c;
    return Scalar::zero(field_);
}

Poly Poly::substitute_one(int var) const {
    Poly r(field_);
    for (const Term& t : terms_) {
        Monomial m = t.m;
        m.e[var] = 0;
        r.terms_.push_back(Term{m, t.c});
    }
    r.normalize();
    return r;
}

Poly Poly::rename_variables(const std::array<int, 3>& out_var) const {
    Poly r(field_);
    for (const Term& t : terms_) {
        Monomial m;
        for (int k = 0; k < 3; ++k) m.e[out_var[k]] += t.m.e[k];
        r.terms_.push_back(Term{m, t.c});
    }
    r.normalize();
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : terms_) {
        std::string c = t.c.str();
        bool negative = !c.empty() && c[0] == '-';
        bool composite = c.find_first_of("+-", 1) != std::string::npos || c.find('i') != std::string::npos;
        if (first) {
            if (negative && !composite) {
                s += "-";
                c = c.substr(1);
            }
            first = false;
        } else {
            if (negative && !composite) {
                s += " - ";
                c = c.substr(1);
            } else {
                s += " + ";
            }
        }
        std::string mono = t.m.str();
        if (composite) {
            s += "(" + c + ")";
            if (mono != "1") s += "*" + mono;
        } else if (mono == "1") {
            s += c;
        } else if (c == "1") {
            s += mono;
        } else {
            s += c + "*" + mono;
        }
    }
    return s;
}

std::array<Poly, 3> wedge(const std::array<Poly, 3>& u, const std::array<Poly, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

PolyMatrix::PolyMatrix(int rows, int cols, const FieldId& f)
    : rows_(rows), cols_(cols), field_(f), e_(static_cast<std::size_t>(rows * cols), Poly(f)) {
    if (rows < 1 || rows > 3 || cols < 1 || cols > 3) throw Refusal("PolyMatrix dimensions must be within 3x3");
}

PolyMatrix PolyMatrix::from_columns(const std::vector<std::array<Poly, 3>>& cols) {
    if (cols.empty() || cols.size() > 3) throw Refusal("from_columns expects 1..3 columns");
    PolyMatrix m(3, static_cast<int>(cols.size()), cols[0][0].field());
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < 3; ++r) {
            if (!(cols[c][r].field() == m.field())) throw FieldMismatch("matrix entries in different fields");
            m.at(r, c) = cols[c][r];
        }
    return m;
}

Poly det3(const PolyMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw Refusal("det3 requires a 3x3 matrix");
    Poly r = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1));
    r = r - m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0));
    r = r + m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    return r;
}

std::array<Poly, 3> minors2x2(const PolyMatrix& m) {
    if (m.rows() != 3 || m.cols() != 2) throw Refusal("minors2x2 requires a 3x2 matrix");
    std::array<Poly, 3> c1 = {m.at(0, 0), m.at(1, 0), m.at(2, 0)};
    std::array<Poly, 3> c2 = {m.at(0, 1), m.at(1, 1), m.at(2, 1)};
    // Expansion along an appended third column q gives det3 = sum q_i * R_i,
    // which makes (R1,R2,R3) exactly the cross product of the two columns.
    return wedge(c1, c2);
}

std::array<Poly, 3> coordinate_triple(const FieldId& f) {
    return {Poly::variable(f, 0), Poly::variable(f, 1), Poly::variable(f, 2)};
}

}  // namespace freecurve
