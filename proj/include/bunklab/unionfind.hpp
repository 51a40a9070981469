#ifndef BUNKLAB_UNIONFIND_HPP
#define BUNKLAB_UNIONFIND_HPP

#include <array>
#include <cstdint>
#include <cstring>

namespace bunklab {

// Fixed-capacity disjoint-set forest for hot enumeration loops.
// reset() is a memcpy of an identity template; no allocation after construction.
template <int Cap>
class SmallUF {
public:
    SmallUF() {
        for (int i = 0; i < Cap; ++i) iota_[i] = static_cast<int16_t>(i);
        reset(Cap);
    }

    void reset(int n) {
        n_ = n;
        std::memcpy(parent_.data(), iota_.data(), sizeof(int16_t) * static_cast<size_t>(n));
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];  // path halving
            x = parent_[x];
        }
        return x;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[b] = a;
    }

    bool same(int a, int b) { return find(a) == find(b); }

    int size() const { return n_; }

private:
    int n_ = Cap;
    std::array<int16_t, Cap> parent_;
    std::array<int16_t, Cap> iota_;
};

// Heap-backed variant for graphs whose size is only known at runtime.
class DynUF {
public:
    explicit DynUF(int n) : parent_(n) { reset(); }

    void reset() {
        for (size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[b] = a;
    }

    bool same(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace bunklab

#endif
