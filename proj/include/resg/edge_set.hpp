#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace resg {

/// Fixed-width bit vector indexed by edge id. Perfect matchings, face
/// boundaries and alternating cycles are all stored this way so that
/// symmetric differences are word-wise XORs.
class edge_set {
  public:
    edge_set() = default;

    explicit edge_set(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool none() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }

    edge_set operator^(const edge_set& o) const {
        edge_set r(*this);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] ^= o.w_[i];
        return r;
    }

    edge_set operator&(const edge_set& o) const {
        edge_set r(*this);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }

    edge_set operator|(const edge_set& o) const {
        edge_set r(*this);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
        return r;
    }

    bool operator==(const edge_set& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const edge_set& o) const { return !(*this == o); }

    bool contains_all(const edge_set& o) const { return (*this & o) == o; }

    std::vector<int> bits() const {
        std::vector<int> out;
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : w_) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }

  private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

struct edge_set_hash {
    size_t operator()(const edge_set& s) const { return s.hash(); }
};

}  // namespace resg
