#ifndef MODOP_LINCOMB_HPP
#define MODOP_LINCOMB_HPP

#include <functional>
#include <map>
#include <utility>

#include "modop/rational.hpp"

namespace modop {

// Sparse linear combination over ordered canonical keys. Zero coefficients
// are pruned on every write, so equality of elements is equality of maps.
// Key spaces are responsible for canonicalizing their keys (emitting a sign
// into the coefficient when canonicalization reorders graded data).
template <class K>
class LinComb {
  public:
    using Map = std::map<K, Rat>;

    LinComb() = default;
    LinComb(K key, Rat c) { add(std::move(key), std::move(c)); }

    static LinComb zero() { return LinComb(); }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    void add(K key, const Rat& c) {
        if (modop::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (modop::is_zero(it->second)) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }

    LinComb& operator-=(const LinComb& o) {
        for (auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }

    LinComb& operator*=(const Rat& s) {
        if (modop::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Rat(-1); }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    Rat coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Linear extension of a key-level map K -> LinComb<K2>.
    template <class K2>
    LinComb<K2> map_terms(const std::function<LinComb<K2>(const K&)>& f) const {
        LinComb<K2> out;
        for (auto& [k, c] : terms_) {
            LinComb<K2> img = f(k);
            img *= c;
            out += img;
        }
        return out;
    }

  private:
    Map terms_;
};

}  // namespace modop

#endif
