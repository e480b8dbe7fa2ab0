#pragma once

#include "qcov/scalar.hpp"

#include <map>
#include <utility>

namespace qcov {

/// Finite formal combination of keys with nonzero Scalar coefficients.
template <class Key>
class LinComb {
public:
    using Map = std::map<Key, Scalar>;
    using const_iterator = typename Map::const_iterator;

    LinComb() = default;
    explicit LinComb(Key k, Scalar c = Scalar(1)) { add(std::move(k), c); }

    void add(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    void add(const LinComb& o, const Scalar& c = Scalar(1)) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k, c.is_one() ? v : v * c);
    }

    Scalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    LinComb& operator+=(const LinComb& o) {
        add(o);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        add(o, Scalar(-1));
        return *this;
    }
    LinComb& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= c;
            if (it->second.is_zero()) {
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Scalar& c) { return a *= c; }
    friend LinComb operator*(const Scalar& c, LinComb a) { return a *= c; }
    LinComb operator-() const { return *this * Scalar(-1); }

    /// Structural equality (same keys, same coefficients).
    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    /// Applies a coefficient map to every term.
    template <class F>
    LinComb map_coefficients(F f) const {
        LinComb r;
        for (const auto& [k, v] : terms_) r.add(k, f(v));
        return r;
    }

private:
    Map terms_;
};

}  // namespace qcov
