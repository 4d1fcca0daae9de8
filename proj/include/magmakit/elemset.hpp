#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace mk {

using ElementId = std::uint32_t;

// Fixed-universe bitset over element ids.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
    ElemSet(std::size_t universe, std::span<const ElementId> ids) : ElemSet(universe) {
        for (auto x : ids) insert(x);
    }
    ElemSet(std::size_t universe, std::initializer_list<ElementId> ids) : ElemSet(universe) {
        for (auto x : ids) insert(x);
    }

    static ElemSet full(std::size_t universe) {
        ElemSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<ElementId>(i));
        return s;
    }

    std::size_t universe() const noexcept { return n_; }
    bool contains(ElementId x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void insert(ElementId x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    void erase(ElementId x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_full() const noexcept { return count() == n_; }

    std::vector<ElementId> elements() const {
        std::vector<ElementId> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                out.push_back(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool subset_of(const ElemSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const ElemSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    ElemSet& operator|=(const ElemSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    std::size_t hash() const noexcept {
        std::size_t h = n_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    friend bool operator==(const ElemSet& a, const ElemSet& b) noexcept {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    // (size, lexicographic ids) order used for every canonical listing
    friend bool canonical_less(const ElemSet& a, const ElemSet& b) {
        auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.elements() < b.elements();
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElemSetHash {
    std::size_t operator()(const ElemSet& s) const noexcept { return s.hash(); }
};

}  // namespace mk
