#include "malmquist/blaschke.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace malmquist {

Sigma::Sigma(std::vector<SigmaPoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("Sigma: at least one point required");
    for (const SigmaPoint& p : points_) {
        if (p.mult < 1) throw std::invalid_argument("Sigma: multiplicity must be >= 1");
        const double a = std::abs(p.lambda);
        if (!(a < 1.0)) throw std::invalid_argument("Sigma: points must lie strictly inside the unit disc");
        r_ = std::max(r_, a);
        for (int j = 0; j < p.mult; ++j) expanded_.push_back(p.lambda);
    }
}

Sigma Sigma::single(cplx lambda, int mult) {
    return Sigma(std::vector<SigmaPoint>{SigmaPoint{lambda, mult}});
}

Sigma Sigma::permuted(const std::vector<int>& point_order) const {
    if (point_order.size() != points_.size()) {
        throw std::invalid_argument("Sigma::permuted: order size mismatch");
    }
    std::vector<SigmaPoint> pts;
    pts.reserve(points_.size());
    for (int idx : point_order) pts.push_back(points_.at(static_cast<std::size_t>(idx)));
    return Sigma(std::move(pts));
}

namespace {

std::string normalize_minus(const std::string& s) {
    // Replace UTF-8 U+2212 with ASCII '-'.
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back('-');
            i += 3;
        } else if (!std::isspace(static_cast<unsigned char>(s[i]))) {
            out.push_back(s[i]);
            ++i;
        } else {
            ++i;
        }
    }
    return out;
}

// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" (numbers in strtod syntax).
cplx parse_complex(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty complex literal");
    double re = 0.0, im = 0.0;
    std::size_t pos = 0;
    auto read_number = [&](double& out) -> bool {
        const char* begin = tok.c_str() + pos;
        // Bare "i" / "+i" / "-i" mean unit imaginary part.
        if (tok[pos] == 'i' ||
            ((tok[pos] == '+' || tok[pos] == '-') && pos + 1 < tok.size() && tok[pos + 1] == 'i')) {
            out = (tok[pos] == '-') ? -1.0 : 1.0;
            pos += (tok[pos] == 'i') ? 0 : 1;
            return true;
        }
        char* end = nullptr;
        out = std::strtod(begin, &end);
        if (end == begin) return false;
        pos += static_cast<std::size_t>(end - begin);
        return true;
    };
    double first = 0.0;
    if (!read_number(first)) throw std::invalid_argument("bad complex literal: " + tok);
    if (pos < tok.size() && tok[pos] == 'i') {
        im = first;
        ++pos;
    } else {
        re = first;
        if (pos < tok.size()) {
            double second = 0.0;
            if (!read_number(second) || pos >= tok.size() || tok[pos] != 'i') {
                throw std::invalid_argument("bad complex literal: " + tok);
            }
            im = second;
            ++pos;
        }
    }
    if (pos != tok.size()) throw std::invalid_argument("bad complex literal: " + tok);
    return cplx(re, im);
}

}  // namespace

Sigma Sigma::parse_shorthand(const std::string& text) {
    const std::string flat = normalize_minus(text);
    std::vector<SigmaPoint> pts;
    std::stringstream ss(flat);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) continue;
        int mult = 1;
        std::string body = tok;
        const std::size_t caret = tok.find('^');
        if (caret != std::string::npos) {
            body = tok.substr(0, caret);
            const std::string mstr = tok.substr(caret + 1);
            try {
                std::size_t used = 0;
                mult = std::stoi(mstr, &used);
                if (used != mstr.size()) throw std::invalid_argument(mstr);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad multiplicity in sigma token: " + tok);
            }
        }
        pts.push_back(SigmaPoint{parse_complex(body), mult});
    }
    return Sigma(std::move(pts));
}

std::string Sigma::to_shorthand() const {
    std::ostringstream out;
    bool first = true;
    for (const SigmaPoint& p : points_) {
        if (!first) out << ';';
        first = false;
        char buf[80];
        std::snprintf(buf, sizeof buf, "%.12g", p.lambda.real());
        out << buf;
        if (p.lambda.imag() != 0.0) {
            std::snprintf(buf, sizeof buf, "%+.12g", p.lambda.imag());
            out << buf << 'i';
        }
        if (p.mult != 1) out << '^' << p.mult;
    }
    return out.str();
}

cplx blaschke_factor(cplx lambda, cplx z) {
    if (!(std::abs(lambda) < 1.0)) throw std::invalid_argument("blaschke_factor: |lambda| < 1 required");
    const cplx den = cplx(1.0) - std::conj(lambda) * z;
    if (den == cplx(0.0)) throw std::domain_error("blaschke_factor: pole at conj(lambda) z = 1");
    return (lambda - z) / den;
}

cplx blaschke_product(const Sigma& sigma, cplx z) {
    cplx acc(1.0);
    for (cplx lam : sigma.expanded()) acc *= blaschke_factor(lam, z);
    return acc;
}

TaylorSeries blaschke_factor_series(cplx lambda, std::size_t d) {
    // (lambda - z) * sum_m conj(lambda)^m z^m: coefficient 0 is lambda,
    // coefficient m >= 1 is conj(lambda)^(m-1) (|lambda|^2 - 1).
    std::vector<cplx> c(d + 1, cplx(0.0));
    c[0] = lambda;
    const cplx lbar = std::conj(lambda);
    const double drop = std::norm(lambda) - 1.0;
    cplx lpow(1.0);
    for (std::size_t m = 1; m <= d; ++m) {
        c[m] = lpow * drop;
        lpow *= lbar;
    }
    return TaylorSeries{std::move(c)};
}

}  // namespace malmquist
