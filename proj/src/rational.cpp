#include "framecheck/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace framecheck {

Rational parse_rational(const std::string& text) {
    std::string trimmed;
    trimmed.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
    }
    if (trimmed.empty()) throw std::invalid_argument("empty rational literal");
    // Validate shape: [-]digits[/digits]. GMP accepts more (whitespace, hex),
    // keep the input format strict so files stay portable.
    auto check_digits = [&](size_t begin, size_t end) {
        if (begin >= end) throw std::invalid_argument("malformed rational: " + text);
        for (size_t i = begin; i < end; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(trimmed[i])))
                throw std::invalid_argument("malformed rational: " + text);
        }
    };
    size_t start = (trimmed[0] == '-' || trimmed[0] == '+') ? 1 : 0;
    size_t slash = trimmed.find('/');
    if (slash == std::string::npos) {
        check_digits(start, trimmed.size());
    } else {
        check_digits(start, slash);
        check_digits(slash + 1, trimmed.size());
    }
    Rational value;
    if (value.set_str(trimmed, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

mpz_class rational_floor(const Rational& value) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

mpz_class rational_ceil(const Rational& value) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

bool perfect_square(const Rational& value, Rational* root) {
    Rational a = rational_abs(value);
    if (mpz_perfect_square_p(a.get_num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(a.get_den().get_mpz_t()) == 0) return false;
    mpz_class num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), a.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), a.get_den().get_mpz_t());
    if (root) {
        *root = Rational(num_root, den_root);
        root->canonicalize();
    }
    return true;
}

std::string format_crational(const CRational& value) {
    if (value.im == 0) return format_rational(value.re);
    return format_rational(value.re) + (value.im < 0 ? "-" : "+") +
           format_rational(rational_abs(value.im)) + "i";
}

int compare(const Rational& a, const Rational& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

int compare(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

}  // namespace framecheck
