#include "freecurve/scalar.hpp"

#include "freecurve/errors.hpp"
#include "freecurve/numbertheory.hpp"

namespace freecurve {

FieldId FieldId::prime_field(std::uint64_t p) {
    if (p >= (1ull << 62)) throw NotPrime("prime-field modulus must be < 2^62");
    if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
    return FieldId{FieldKind::Fp, p};
}

std::string FieldId::name() const {
    switch (kind) {
        case FieldKind::Q: return "Q";
        case FieldKind::QI: return "Q(i)";
        case FieldKind::Fp: return "GF(" + std::to_string(p) + ")";
    }
    return "?";
}

FieldId FieldId::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text == "qi" || text == "QI" || text == "q(i)") return gaussian_rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::uint64_t p = std::stoull(text.substr(3));
        return prime_field(p);
    }
    throw Refusal("unknown field '" + text + "' (expected q, qi or fp:P)");
}

Scalar Scalar::zero(const FieldId& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldId& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Fp)
        s.fp_ = 1 % f.p;
    else
        s.re_ = 1;
    return s;
}

Scalar Scalar::of_int(const FieldId& f, long v) {
    if (f.kind == FieldKind::Fp) return fp(f, mpz_class(v));
    Scalar s;
    s.field_ = f;
    s.re_ = v;
    return s;
}

Scalar Scalar::rational(const mpq_class& v) {
    Scalar s;
    s.re_ = v;
    s.re_.canonicalize();
    return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    return rational(mpq_class(num) / mpq_class(den));
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
    Scalar s;
    s.field_ = FieldId::gaussian_rationals();
    s.re_ = re;
    s.im_ = im;
    s.re_.canonicalize();
    s.im_.canonicalize();
    return s;
}

Scalar Scalar::fp(const FieldId& f, const mpz_class& v) {
    if (f.kind != FieldKind::Fp) throw FieldMismatch("fp() requires a prime field");
    Scalar s;
    s.field_ = f;
    mpz_class m = v % mpz_class(mpz_class(f.p));
    if (m < 0) m += mpz_class(f.p);
    s.fp_ = m.get_ui();
    return s;
}

Scalar Scalar::fp(const FieldId& f, std::uint64_t v) {
    if (f.kind != FieldKind::Fp) throw FieldMismatch("fp() requires a prime field");
    Scalar s;
    s.field_ = f;
    s.fp_ = v % f.p;
    return s;
}

bool Scalar::is_zero() const {
    switch (field_.kind) {
        case FieldKind::Q: return re_ == 0;
        case FieldKind::QI: return re_ == 0 && im_ == 0;
        case FieldKind::Fp: return fp_ == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_.kind) {
        case FieldKind::Q: return re_ == 1;
        case FieldKind::QI: return re_ == 1 && im_ == 0;
        case FieldKind::Fp: return fp_ == 1 % field_.p;
    }
    return false;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: r.re_ = re_ + o.re_; break;
        case FieldKind::QI:
            r.re_ = re_ + o.re_;
            r.im_ = im_ + o.im_;
            break;
        case FieldKind::Fp: {
            std::uint64_t s = fp_ + o.fp_;  // p < 2^62: no wrap
            r.fp_ = s >= field_.p ? s - field_.p : s;
            break;
        }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: r.re_ = re_ - o.re_; break;
        case FieldKind::QI:
            r.re_ = re_ - o.re_;
            r.im_ = im_ - o.im_;
            break;
        case FieldKind::Fp: r.fp_ = fp_ >= o.fp_ ? fp_ - o.fp_ : fp_ + field_.p - o.fp_; break;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: r.re_ = re_ * o.re_; break;
        case FieldKind::QI:
            r.re_ = re_ * o.re_ - im_ * o.im_;
            r.im_ = re_ * o.im_ + im_ * o.re_;
            break;
        case FieldKind::Fp: r.fp_ = mul_mod(fp_, o.fp_, field_.p); break;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: r.re_ = 1 / re_; break;
        case FieldKind::QI: {
            mpq_class n = re_ * re_ + im_ * im_;
            r.re_ = re_ / n;
            r.im_ = -im_ / n;
            break;
        }
        case FieldKind::Fp: r.fp_ = inv_mod(fp_, field_.p); break;
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: r.re_ = -re_; break;
        case FieldKind::QI:
            r.re_ = -re_;
            r.im_ = -im_;
            break;
        case FieldKind::Fp: r.fp_ = fp_ == 0 ? 0 : field_.p - fp_; break;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    switch (field_.kind) {
        case FieldKind::Q: return re_ == o.re_;
        case FieldKind::QI: return re_ == o.re_ && im_ == o.im_;
        case FieldKind::Fp: return fp_ == o.fp_;
    }
    return false;
}

std::uint64_t Scalar::reduce_mod(std::uint64_t p, std::uint64_t i_image) const {
    auto reduce_q = [&](const mpq_class& q) -> std::uint64_t {
        mpz_class den = q.get_den() % mpz_class(p);
        if (den == 0) throw FieldUnsupported("denominator vanishes mod " + std::to_string(p));
        mpz_class num = q.get_num() % mpz_class(p);
        if (num < 0) num += mpz_class(p);
        return mul_mod(num.get_ui(), inv_mod(den.get_ui(), p), p);
    };
    switch (field_.kind) {
        case FieldKind::Q: return reduce_q(re_);
        case FieldKind::QI: {
            if (i_image == 0 && !(im_ == 0))
                throw FieldUnsupported("no image of i supplied for reduction mod p");
            std::uint64_t r = reduce_q(re_);
            if (im_ == 0) return r;
            std::uint64_t ii = mul_mod(reduce_q(im_), i_image, p);
            std::uint64_t s = r + ii;
            return s >= p ? s - p : s;
        }
        case FieldKind::Fp:
            if (field_.p != p) throw FieldUnsupported("modulus mismatch in reduction");
            return fp_;
    }
    throw FieldUnsupported("unreachable");
}

std::string Scalar::str() const {
    switch (field_.kind) {
        case FieldKind::Q: return re_.get_str();
        case FieldKind::QI: {
            if (im_ == 0) return re_.get_str();
            std::string imag;
            if (im_ == 1)
                imag = "i";
            else if (im_ == -1)
                imag = "-i";
            else
                imag = im_.get_str() + "*i";
            if (re_ == 0) return imag;
            if (im_ > 0) return re_.get_str() + "+" + imag;
            return re_.get_str() + imag;  // sign carried by the imaginary part
        }
        case FieldKind::Fp: return std::to_string(fp_);
    }
    return "?";
}

}  // namespace freecurve
