#include "specht/blocks.hpp"

#include "specht/linalg.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace specht {

GroundSet::GroundSet(int v) : v_(v) {
    if (v < 1 || v > kMaxPoints)
        throw std::invalid_argument("GroundSet: v must be in [1, " + std::to_string(kMaxPoints) +
                                    "], got " + std::to_string(v));
}

Block::Block(std::initializer_list<int> points) : Block(std::vector<int>(points)) {}

Block::Block(const std::vector<int>& points) {
    for (int p : points) {
        if (p < 1 || p > GroundSet::kMaxPoints)
            throw std::invalid_argument("Block: point " + std::to_string(p) + " out of range");
        const uint32_t bit = 1u << (p - 1);
        if (mask_ & bit)
            throw std::invalid_argument("Block: duplicate point " + std::to_string(p));
        mask_ |= bit;
    }
}

int Block::size() const {
    return std::popcount(mask_);
}

bool Block::contains(int point) const {
    return point >= 1 && point <= GroundSet::kMaxPoints && (mask_ & (1u << (point - 1)));
}

std::vector<int> Block::elements() const {
    std::vector<int> out;
    for (int p = 1; p <= GroundSet::kMaxPoints; ++p)
        if (mask_ & (1u << (p - 1)))
            out.push_back(p);
    return out;
}

void for_each_block(int v, int k, const std::function<void(Block)>& fn) {
    if (k < 0 || k > v)
        return;
    if (k == 0) {
        fn(Block(0u));
        return;
    }
    // Gosper's hack walks same-popcount masks in increasing (= colex) order.
    uint32_t x = (1u << k) - 1;
    const uint32_t limit = 1u << v;
    while (x < limit) {
        fn(Block(x));
        const uint32_t c = x & -x;
        const uint32_t r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

void for_each_subset(Block of, int k, const std::function<void(Block)>& fn) {
    const std::vector<int> elems = of.elements();
    const int m = static_cast<int>(elems.size());
    if (k < 0 || k > m)
        return;
    if (k == 0) {
        fn(Block(0u));
        return;
    }
    // Index combinations in colex order: bump the smallest movable index.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        uint32_t mask = 0;
        for (int i : idx)
            mask |= 1u << (elems[i] - 1);
        fn(Block(mask));
        int j = 0;
        while (j < k) {
            const int cap = (j + 1 < k) ? idx[j + 1] : m;
            if (idx[j] + 1 < cap)
                break;
            ++j;
        }
        if (j == k)
            return;
        ++idx[j];
        for (int i = 0; i < j; ++i)
            idx[i] = i;
    }
}

int64_t colex_rank(const Block& b) {
    const std::vector<int> e = b.elements();
    Int r = 0;
    for (size_t i = 0; i < e.size(); ++i)
        r += binom(e[i] - 1, static_cast<int64_t>(i) + 1);
    return static_cast<int64_t>(r);
}

BlockVector::BlockVector(GroundSet ground, std::map<Block, Int> entries)
    : ground_(ground), entries_(std::move(entries)) {
    const uint32_t full = ground_.full_mask();
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->first.mask() & ~full)
            throw std::invalid_argument("BlockVector: block outside ground set");
        if (it->second == 0)
            it = entries_.erase(it);
        else
            ++it;
    }
}

Int BlockVector::coefficient(const Block& b) const {
    auto it = entries_.find(b);
    return it == entries_.end() ? Int(0) : it->second;
}

Int BlockVector::coefficient_sum() const {
    Int s = 0;
    for (const auto& [b, c] : entries_)
        s += c;
    return s;
}

int BlockVector::constant_block_size() const {
    int size = -1;
    for (const auto& [b, c] : entries_) {
        if (size == -1)
            size = b.size();
        else if (b.size() != size)
            throw std::logic_error("BlockVector: mixed block sizes");
    }
    return size;
}

BlockVector BlockVector::operator+(const BlockVector& rhs) const {
    if (!(ground_ == rhs.ground_))
        throw std::invalid_argument("BlockVector: ground set mismatch");
    std::map<Block, Int> out = entries_;
    for (const auto& [b, c] : rhs.entries_) {
        Int& slot = out[b];
        slot += c;
        if (slot == 0)
            out.erase(b);
    }
    return BlockVector(ground_, std::move(out));
}

BlockVector BlockVector::operator-(const BlockVector& rhs) const {
    return *this + (-rhs);
}

BlockVector BlockVector::operator-() const {
    std::map<Block, Int> out;
    for (const auto& [b, c] : entries_)
        out.emplace(b, -c);
    return BlockVector(ground_, std::move(out));
}

BlockVector BlockVector::operator*(const Int& scalar) const {
    std::map<Block, Int> out;
    if (scalar != 0)
        for (const auto& [b, c] : entries_)
            out.emplace(b, c * scalar);
    return BlockVector(ground_, std::move(out));
}

BlockVector delta(const GroundSet& ground, const Block& x) {
    if (x.mask() & ~ground.full_mask())
        throw std::invalid_argument("delta: block not contained in ground set");
    std::map<Block, Int> e;
    e.emplace(x, 1);
    return BlockVector(ground, std::move(e));
}

BlockVector dqr(const GroundSet& ground, int q, int r) {
    if (q == r)
        throw std::invalid_argument("dqr: points must be distinct");
    if (q < 1 || q > ground.v() || r < 1 || r > ground.v())
        throw std::invalid_argument("dqr: point out of range");
    std::map<Block, Int> e;
    e.emplace(Block{q}, 1);
    e.emplace(Block{r}, -1);
    return BlockVector(ground, std::move(e));
}

BlockVector ones(const GroundSet& ground, int size) {
    if (size < 0 || size > ground.v())
        throw std::invalid_argument("ones: size out of range");
    std::map<Block, Int> e;
    for_each_block(ground.v(), size, [&](Block b) { e.emplace(b, 1); });
    return BlockVector(ground, std::move(e));
}

BlockVector transform(const BlockVector& c, int s) {
    if (s < 0 || s > c.ground().v())
        throw std::invalid_argument("transform: level out of range");
    std::map<Block, Int> out;
    for (const auto& entry : c.entries()) {
        const Block& x = entry.first;
        const Int& coeff = entry.second;
        if (x.size() < s)
            continue;
        for_each_subset(x, s, [&](Block y) {
            Int& slot = out[y];
            slot += coeff;
            if (slot == 0)
                out.erase(y);
        });
    }
    return BlockVector(c.ground(), std::move(out));
}

BlockVector convolve(const BlockVector& c, const BlockVector& d) {
    if (!(c.ground() == d.ground()))
        throw std::invalid_argument("convolve: ground set mismatch");
    std::map<Block, Int> out;
    for (const auto& [x, cx] : c.entries())
        for (const auto& [y, dy] : d.entries()) {
            const Block z = x.sym_diff(y);
            Int& slot = out[z];
            slot += cx * dy;
            if (slot == 0)
                out.erase(z);
        }
    return BlockVector(c.ground(), std::move(out));
}

std::set<Block> support(const BlockVector& c) {
    std::set<Block> s;
    for (const auto& [b, coeff] : c.entries())
        s.insert(b);
    return s;
}

Block foundation(const BlockVector& c) {
    uint32_t mask = 0;
    for (const auto& [b, coeff] : c.entries())
        mask |= b.mask();
    return Block(mask);
}

BlockVector delete_point(const BlockVector& c) {
    const int v = c.ground().v();
    if (v <= 1)
        throw std::invalid_argument("delete_point: ground set has a single point");
    const uint32_t vbit = 1u << (v - 1);
    std::map<Block, Int> out;
    for (const auto& [b, coeff] : c.entries())
        if (b.mask() & vbit)
            out.emplace(Block(b.mask() & ~vbit), coeff);
    return BlockVector(GroundSet(v - 1), std::move(out));
}

int64_t inclusion_rank(int v, int t, int l) {
    if (v < 1 || v > 16)
        throw std::length_error("inclusion_rank: matrix materialization guarded at v <= 16");
    if (t < 0 || l < 0 || t > v || l > v)
        throw std::invalid_argument("inclusion_rank: levels out of range");
    std::vector<Block> rows, cols;
    for_each_block(v, t, [&](Block b) { rows.push_back(b); });
    for_each_block(v, l, [&](Block b) { cols.push_back(b); });
    IntMat m(rows.size(), std::vector<Int>(cols.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            if (rows[i].subset_of(cols[j]))
                m[i][j] = 1;
    return exact_rank(std::move(m));
}

}  // namespace specht
