#ifndef MODOP_LABELS_HPP
#define MODOP_LABELS_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "modop/rational.hpp"

namespace modop {

// Leg labels are opaque ordered tokens; plain ints underneath so that
// "arbitrary bijections" can be fixed deterministically as the
// order-preserving ones.
using Label = int;

// A leg set is kept sorted and duplicate-free.
using LegSet = std::vector<Label>;

inline LegSet make_legs(std::vector<Label> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline LegSet range_legs(int n) {  // [n] = {1,...,n}
    LegSet v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

inline bool legs_contain(const LegSet& s, Label x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline int leg_index(const LegSet& s, Label x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) throw std::invalid_argument("label not in leg set");
    return static_cast<int>(it - s.begin());
}

inline bool legs_disjoint(const LegSet& a, const LegSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return false;
    }
    return true;
}

inline LegSet legs_union(const LegSet& a, const LegSet& b) {
    LegSet out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline LegSet legs_minus(const LegSet& a, std::initializer_list<Label> drop) {
    LegSet out;
    out.reserve(a.size());
    for (Label x : a)
        if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
    return out;
}

// Permutation of {0,...,n-1}; images[i] is where position i goes.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : im_(std::move(images)) {
        std::vector<bool> seen(im_.size(), false);
        for (int v : im_) {
            if (v < 0 || v >= static_cast<int>(im_.size()) || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i;
        return Perm(std::move(im));
    }

    static Perm random(int n, Rng& rng) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i;
        rng.shuffle(im);
        return Perm(std::move(im));
    }

    int size() const { return static_cast<int>(im_.size()); }
    int operator()(int i) const { return im_[i]; }

    Perm inverse() const {
        std::vector<int> im(im_.size());
        for (int i = 0; i < size(); ++i) im[im_[i]] = i;
        return Perm(std::move(im));
    }

    // (this * other)(i) = this(other(i))
    Perm after(const Perm& other) const {
        std::vector<int> im(im_.size());
        for (int i = 0; i < size(); ++i) im[i] = im_[other(i)];
        return Perm(std::move(im));
    }

    bool operator==(const Perm& o) const { return im_ == o.im_; }

    // Apply to a slot-indexed vector: result[sigma(i)] = v[i].
    template <class T>
    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(v.size());
        for (int i = 0; i < size(); ++i) out[im_[i]] = v[i];
        return out;
    }

  private:
    std::vector<int> im_;
};

// Koszul sign for permuting graded slots: x_0 (x) ... (x) x_{n-1} with
// degrees degs[i], sent to the tensor with x_i in slot sigma(i). Each
// inversion of two odd slots contributes -1.
inline int koszul_sign(const Perm& sigma, const std::vector<int>& degs) {
    if (sigma.size() != static_cast<int>(degs.size()))
        throw std::invalid_argument("koszul_sign: size mismatch");
    int parity = 0;
    for (int i = 0; i < sigma.size(); ++i)
        for (int j = i + 1; j < sigma.size(); ++j)
            if (sigma(i) > sigma(j) && (degs[i] & 1) && (degs[j] & 1)) parity ^= 1;
    return parity ? -1 : 1;
}

// Bijection between two finite label sets.
class LabelBijection {
  public:
    LabelBijection() = default;
    explicit LabelBijection(std::map<Label, Label> m) : map_(std::move(m)) {
        std::vector<Label> img;
        img.reserve(map_.size());
        for (auto& [k, v] : map_) img.push_back(v);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            throw std::invalid_argument("label bijection not injective");
    }

    static LabelBijection identity(const LegSet& s) {
        std::map<Label, Label> m;
        for (Label x : s) m[x] = x;
        return LabelBijection(std::move(m));
    }

    // The canonical order-preserving bijection between equal-size sorted sets.
    static LabelBijection order_preserving(const LegSet& from, const LegSet& to) {
        if (from.size() != to.size()) throw std::invalid_argument("size mismatch");
        std::map<Label, Label> m;
        for (size_t i = 0; i < from.size(); ++i) m[from[i]] = to[i];
        return LabelBijection(std::move(m));
    }

    static LabelBijection random(const LegSet& from, const LegSet& to, Rng& rng) {
        if (from.size() != to.size()) throw std::invalid_argument("size mismatch");
        std::vector<Label> img(to);
        rng.shuffle(img);
        std::map<Label, Label> m;
        for (size_t i = 0; i < from.size(); ++i) m[from[i]] = img[i];
        return LabelBijection(std::move(m));
    }

    Label operator()(Label x) const {
        auto it = map_.find(x);
        if (it == map_.end()) throw std::invalid_argument("label bijection: not in domain");
        return it->second;
    }

    bool defined_on(const LegSet& s) const {
        for (Label x : s)
            if (!map_.count(x)) return false;
        return true;
    }

    LegSet domain() const {
        LegSet d;
        d.reserve(map_.size());
        for (auto& [k, v] : map_) d.push_back(k);
        return d;
    }

    LegSet image() const {
        LegSet im;
        im.reserve(map_.size());
        for (auto& [k, v] : map_) im.push_back(v);
        std::sort(im.begin(), im.end());
        return im;
    }

    LabelBijection inverse() const {
        std::map<Label, Label> m;
        for (auto& [k, v] : map_) m[v] = k;
        return LabelBijection(std::move(m));
    }

    LabelBijection after(const LabelBijection& first) const {
        std::map<Label, Label> m;
        for (auto& [k, v] : first.map_) m[k] = (*this)(v);
        return LabelBijection(std::move(m));
    }

    // Union of two bijections with disjoint domains.
    static LabelBijection disjoint_union(const LabelBijection& a, const LabelBijection& b) {
        std::map<Label, Label> m = a.map_;
        for (auto& [k, v] : b.map_) {
            if (m.count(k)) throw std::invalid_argument("disjoint_union: overlapping domains");
            m[k] = v;
        }
        return LabelBijection(std::move(m));
    }

    // Restriction of the map to sorted-position permutation: for a bijection
    // rho: C -> D, the permutation sigma with sigma(i) = position of rho(C[i]) in sorted D.
    Perm sorted_perm(const LegSet& from) const {
        LegSet to;
        to.reserve(from.size());
        for (Label x : from) to.push_back((*this)(x));
        LegSet sorted_to = to;
        std::sort(sorted_to.begin(), sorted_to.end());
        std::vector<int> im(from.size());
        for (size_t i = 0; i < from.size(); ++i) im[i] = leg_index(sorted_to, to[i]);
        return Perm(std::move(im));
    }

  private:
    std::map<Label, Label> map_;
};

}  // namespace modop

#endif
