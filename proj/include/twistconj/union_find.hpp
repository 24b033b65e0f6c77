#pragma once

#include <numeric>
#include <vector>

namespace twistconj {

// Union-find with path compression and union by size.
class UnionFind
{
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), count_(n)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x)
    {
        std::size_t root = x;
        while (parent_[root] != root)
            root = parent_[root];
        while (parent_[x] != root) {
            const std::size_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    // Returns true when two distinct blocks were joined.
    bool merge(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --count_;
        return true;
    }

    bool connected(std::size_t a, std::size_t b) { return find(a) == find(b); }

    std::size_t block_count() const { return count_; }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t count_;
};

} // namespace twistconj
