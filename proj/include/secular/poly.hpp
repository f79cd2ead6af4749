#pragma once
// Dense polynomials over an arbitrary coefficient ring (exact rationals,
// complex doubles, big integers). Coefficients stored low degree first;
// the zero polynomial is the empty vector.
#include <vector>
#include <complex>
#include "errors.hpp"

namespace secular {

template <typename T>
class DensePoly {
  public:
    DensePoly() = default;
    explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static DensePoly constant(const T& v) { return DensePoly(std::vector<T>{v}); }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    T get(size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    void add_at(size_t i, const T& v) {
        if (i >= c_.size()) c_.resize(i + 1, T(0));
        c_[i] += v;
        trim();
    }

    T eval(const T& x) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    DensePoly operator+(const DensePoly& o) const {
        std::vector<T> out(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
        return DensePoly(std::move(out));
    }

    DensePoly operator-(const DensePoly& o) const {
        std::vector<T> out(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
        return DensePoly(std::move(out));
    }

    DensePoly operator*(const DensePoly& o) const {
        if (c_.empty() || o.c_.empty()) return DensePoly();
        std::vector<T> out(c_.size() + o.c_.size() - 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] += c_[i] * o.c_[j];
        return DensePoly(std::move(out));
    }

    DensePoly operator*(const T& s) const {
        std::vector<T> out(c_);
        for (auto& v : out) v *= s;
        return DensePoly(std::move(out));
    }

    // multiply by x^e
    DensePoly shifted(size_t e) const {
        if (c_.empty()) return DensePoly();
        std::vector<T> out(c_.size() + e, T(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i + e] = c_[i];
        return DensePoly(std::move(out));
    }

    bool operator==(const DensePoly& o) const { return c_ == o.c_; }

    // first n coefficients of the power-series inverse; needs a unit constant term
    DensePoly truncated_inverse(size_t n) const {
        require(!c_.empty() && !(c_[0] == T(0)),
                "series inverse needs a nonzero constant term");
        std::vector<T> out(n, T(0));
        T inv0 = T(1) / c_[0];
        if (n == 0) return DensePoly();
        out[0] = inv0;
        for (size_t i = 1; i < n; ++i) {
            T acc(0);
            for (size_t j = 1; j <= i && j < c_.size(); ++j) acc += c_[j] * out[i - j];
            out[i] = -acc * inv0;
        }
        std::vector<T> trimmed = out;
        return DensePoly(std::move(trimmed));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

template <typename T>
DensePoly<T> poly_add(const DensePoly<T>& a, const DensePoly<T>& b) { return a + b; }

template <typename T>
DensePoly<T> poly_mul(const DensePoly<T>& a, const DensePoly<T>& b) { return a * b; }

template <typename T>
T poly_eval(const DensePoly<T>& p, const T& x) { return p.eval(x); }

template <typename T>
DensePoly<T> series_truncated_inverse(const DensePoly<T>& p, size_t n) {
    return p.truncated_inverse(n);
}

} // namespace secular
