#include "specht/tabloids.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace specht {

Composition::Composition(std::vector<int64_t> parts) : parts_(std::move(parts)), n_(0) {
    if (parts_.empty())
        throw std::invalid_argument("Composition: needs at least one part");
    for (int64_t p : parts_) {
        if (p < 0)
            throw std::invalid_argument("Composition: parts must be nonnegative");
        n_ += p;
    }
    if (n_ < 1)
        throw std::invalid_argument("Composition: n must be >= 1");
}

bool Composition::is_partition() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1])
            return false;
    return true;
}

namespace {

void validate_tabloid(const Composition& shape, const Tabloid& t) {
    const auto& parts = shape.parts();
    if (t.rows.size() + 1 != parts.size())
        throw std::invalid_argument("Tabloid: row count does not match shape");
    uint32_t seen = 0;
    for (size_t j = 0; j < t.rows.size(); ++j) {
        if (t.rows[j].size() != parts[j + 1])
            throw std::invalid_argument("Tabloid: row " + std::to_string(j + 2) +
                                        " has wrong size");
        if (seen & t.rows[j].mask())
            throw std::invalid_argument("Tabloid: rows overlap");
        seen |= t.rows[j].mask();
    }
    const int64_t n = shape.n();
    if (n > GroundSet::kMaxPoints)
        throw std::length_error("Tabloid: n exceeds desk scale (20 points)");
    if (seen & ~((n == 32) ? ~0u : ((1u << n) - 1)))
        throw std::invalid_argument("Tabloid: point outside {1..n}");
}

std::atomic<uint64_t> g_guard_override{0};

}  // namespace

TabloidVector::TabloidVector(Composition shape, std::map<Tabloid, Int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        validate_tabloid(shape_, it->first);
        if (it->second == 0)
            it = entries_.erase(it);
        else
            ++it;
    }
}

Int TabloidVector::coefficient(const Tabloid& t) const {
    auto it = entries_.find(t);
    return it == entries_.end() ? Int(0) : it->second;
}

Int TabloidVector::coefficient_sum() const {
    Int s = 0;
    for (const auto& [t, c] : entries_)
        s += c;
    return s;
}

TabloidVector TabloidVector::operator+(const TabloidVector& rhs) const {
    if (shape_ != rhs.shape_)
        throw std::invalid_argument("TabloidVector: shape mismatch");
    std::map<Tabloid, Int> out = entries_;
    for (const auto& [t, c] : rhs.entries_) {
        Int& slot = out[t];
        slot += c;
        if (slot == 0)
            out.erase(t);
    }
    return TabloidVector(shape_, std::move(out));
}

TabloidVector TabloidVector::operator-(const TabloidVector& rhs) const {
    return *this + (-rhs);
}

TabloidVector TabloidVector::operator-() const {
    std::map<Tabloid, Int> out;
    for (const auto& [t, c] : entries_)
        out.emplace(t, -c);
    return TabloidVector(shape_, std::move(out));
}

TabloidVector TabloidVector::operator*(const Int& scalar) const {
    std::map<Tabloid, Int> out;
    if (scalar != 0)
        for (const auto& [t, c] : entries_)
            out.emplace(t, c * scalar);
    return TabloidVector(shape_, std::move(out));
}

uint64_t tabloid_guard() {
    const uint64_t o = g_guard_override.load();
    if (o != 0)
        return o;
    static const uint64_t env_guard = [] {
        if (const char* s = std::getenv("SPECHT_GUARD")) {
            const long long g = std::atoll(s);
            if (g > 0)
                return static_cast<uint64_t>(g);
        }
        return static_cast<uint64_t>(1000000);
    }();
    return env_guard;
}

void set_tabloid_guard(uint64_t guard) {
    g_guard_override.store(guard);
}

Int tabloid_count(const Composition& shape) {
    Int num = 1;
    for (int64_t i = 2; i <= shape.n(); ++i)
        num *= i;
    for (int64_t p : shape.parts())
        for (int64_t i = 2; i <= p; ++i)
            num /= i;
    return num;
}

void for_each_tabloid(const Composition& shape, const std::function<void(const Tabloid&)>& fn) {
    const int64_t n = shape.n();
    if (n > GroundSet::kMaxPoints)
        throw std::length_error("for_each_tabloid: n exceeds desk scale (20 points)");
    const auto& parts = shape.parts();
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    Tabloid t;
    t.rows.resize(parts.size() - 1);
    std::function<void(size_t, uint32_t)> rec = [&](size_t j, uint32_t remaining) {
        if (j + 1 == parts.size()) {
            fn(t);
            return;
        }
        for_each_subset(Block(remaining), static_cast<int>(parts[j + 1]), [&](Block row) {
            t.rows[j] = row;
            rec(j + 1, remaining & ~row.mask());
        });
    };
    rec(0, full);
}

TabloidVector f_lambda(const Composition& shape) {
    const Int count = tabloid_count(shape);
    if (count > tabloid_guard())
        throw std::length_error("f_lambda: " + count.str() + " tabloids exceeds guard " +
                                std::to_string(tabloid_guard()));
    std::map<Tabloid, Int> entries;
    for_each_tabloid(shape, [&](const Tabloid& t) { entries.emplace(t, 1); });
    return TabloidVector(shape, std::move(entries));
}

Composition psi_target_shape(const Composition& shape, int i, int64_t v) {
    const auto& parts = shape.parts();
    const int64_t r = shape.rows();
    if (i < 1 || i > r - 1)
        throw std::invalid_argument("psi: row index out of range");
    if (v < 0 || v > parts[i])
        throw std::invalid_argument("psi: need 0 <= v <= lambda_{i+1}");
    std::vector<int64_t> out = parts;
    out[i - 1] = parts[i - 1] + parts[i] - v;
    out[i] = v;
    return Composition(std::move(out));
}

void psi_images(const Composition& shape, const Tabloid& t, int i, int64_t v,
                const std::function<void(const Tabloid&)>& fn) {
    psi_target_shape(shape, i, v);  // validates the indices
    const Block row_next = t.rows[i - 1];  // row i+1 of the tabloid
    for_each_subset(row_next, static_cast<int>(v), [&](Block kept) {
        Tabloid image = t;
        if (i >= 2)
            image.rows[i - 2] = image.rows[i - 2].unite(row_next.minus(kept));
        image.rows[i - 1] = kept;
        fn(image);
    });
}

TabloidVector psi(const TabloidVector& u, int i, int64_t v) {
    const Composition target = psi_target_shape(u.shape(), i, v);
    std::map<Tabloid, Int> out;
    for (const auto& entry : u.entries()) {
        const Int& coeff = entry.second;
        psi_images(u.shape(), entry.first, i, v, [&](const Tabloid& image) {
            Int& slot = out[image];
            slot += coeff;
            if (slot == 0)
                out.erase(image);
        });
    }
    return TabloidVector(target, std::move(out));
}

Int dim_specht(const Composition& partition) {
    if (!partition.is_partition())
        throw std::invalid_argument("dim_specht: not a partition");
    std::vector<int64_t> parts;
    for (int64_t p : partition.parts())
        if (p > 0)
            parts.push_back(p);
    if (parts.empty())
        return 0;
    // conjugate part j = number of rows longer than j
    std::vector<int64_t> conj(parts[0], 0);
    for (int64_t p : parts)
        for (int64_t j = 0; j < p; ++j)
            ++conj[j];
    Int factorial = 1;
    for (int64_t i = 2; i <= partition.n(); ++i)
        factorial *= i;
    Int hooks = 1;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int64_t j = 0; j < parts[i]; ++j)
            hooks *= (parts[i] - j) + (conj[j] - static_cast<int64_t>(i)) - 1;
    return factorial / hooks;  // exact by Frame-Robinson-Thrall
}

Int dim_m(const Composition& shape) {
    return tabloid_count(shape);
}

TabloidVector reduce_mod(const TabloidVector& u, const PrimeP& p) {
    std::map<Tabloid, Int> out;
    for (const auto& [t, c] : u.entries()) {
        Int r = c % p.value();
        if (r < 0)
            r += p.value();
        if (r != 0)
            out.emplace(t, std::move(r));
    }
    return TabloidVector(u.shape(), std::move(out));
}

TabloidVector tabloid_vector_from_blocks(const BlockVector& c, const Composition& two_part) {
    if (two_part.rows() != 2)
        throw std::invalid_argument("tabloid_vector_from_blocks: shape must have two parts");
    if (two_part.n() != c.ground().v())
        throw std::invalid_argument("tabloid_vector_from_blocks: ground size mismatch");
    std::map<Tabloid, Int> out;
    for (const auto& [b, coeff] : c.entries()) {
        if (b.size() != two_part.parts()[1])
            throw std::invalid_argument("tabloid_vector_from_blocks: block size != lambda_2");
        out.emplace(Tabloid{{b}}, coeff);
    }
    return TabloidVector(two_part, std::move(out));
}

BlockVector blocks_from_tabloid_vector(const TabloidVector& u) {
    if (u.shape().rows() != 2)
        throw std::invalid_argument("blocks_from_tabloid_vector: shape must have two parts");
    const GroundSet ground(static_cast<int>(u.shape().n()));
    std::map<Block, Int> out;
    for (const auto& [t, coeff] : u.entries())
        out.emplace(t.rows[0], coeff);
    return BlockVector(ground, std::move(out));
}

}  // namespace specht
