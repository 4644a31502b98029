#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zolosign/modmath.hpp"

/// Finite permutations on a contiguous integer domain, with two independent
/// parity algorithms (cycle counting and inversion counting) and the
/// invariant-subset restriction used to factor signs.
namespace zolosign {

struct DomainMismatchError : Error {
    using Error::Error;
};

/// restrict() was handed a subset the permutation does not map onto itself.
struct NotInvariantError : Error {
    using Error::Error;
};

/// +1 or -1, the multiplicative group of order 2.
class Sign {
public:
    constexpr explicit Sign(int v) : v_(v >= 0 ? 1 : -1) {}
    static constexpr Sign positive() { return Sign(1); }
    static constexpr Sign negative() { return Sign(-1); }

    /// (-1)^e with mathematical parity, valid for negative exponents too.
    static constexpr Sign pow_minus_one(std::int64_t e) {
        return (e % 2 + 2) % 2 == 0 ? positive() : negative();
    }

    constexpr int value() const { return v_; }
    constexpr bool operator==(const Sign&) const = default;
    friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }

private:
    int v_;
};

/// A bijection on {offset, ..., offset + size - 1}, stored as the image list.
/// Bijectivity is validated at construction, so every Permutation in flight
/// is genuine.
class Permutation {
public:
    Permutation(std::int64_t domain_offset, std::vector<std::int64_t> images)
        : offset_(domain_offset), images_(std::move(images)) {
        const auto m = static_cast<std::int64_t>(images_.size());
        std::vector<bool> seen(images_.size(), false);
        for (std::int64_t y : images_) {
            std::int64_t i = y - offset_;
            if (i < 0 || i >= m || seen[static_cast<std::size_t>(i)])
                throw std::invalid_argument("Permutation: images are not a rearrangement of the domain");
            seen[static_cast<std::size_t>(i)] = true;
        }
    }

    static Permutation identity(std::int64_t domain_offset, std::int64_t size) {
        std::vector<std::int64_t> images(static_cast<std::size_t>(size));
        for (std::int64_t i = 0; i < size; ++i)
            images[static_cast<std::size_t>(i)] = domain_offset + i;
        return Permutation(domain_offset, std::move(images));
    }

    std::int64_t domain_offset() const { return offset_; }
    std::int64_t size() const { return static_cast<std::int64_t>(images_.size()); }
    bool contains(std::int64_t x) const { return x >= offset_ && x < offset_ + size(); }

    std::int64_t operator()(std::int64_t x) const {
        return images_[static_cast<std::size_t>(x - offset_)];
    }

    std::span<const std::int64_t> images() const { return images_; }

    Permutation inverse() const {
        std::vector<std::int64_t> inv(images_.size());
        for (std::int64_t i = 0; i < size(); ++i)
            inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)] - offset_)] =
                offset_ + i;
        return Permutation(offset_, std::move(inv));
    }

    bool operator==(const Permutation& other) const {
        return offset_ == other.offset_ && images_ == other.images_;
    }

    bool same_domain(const Permutation& other) const {
        return offset_ == other.offset_ && size() == other.size();
    }

private:
    std::int64_t offset_;
    std::vector<std::int64_t> images_;
};

/// f after g: result(x) = f(g(x)).
inline Permutation compose(const Permutation& f, const Permutation& g) {
    if (!f.same_domain(g))
        throw DomainMismatchError("compose: permutations act on different domains");
    std::vector<std::int64_t> images(static_cast<std::size_t>(f.size()));
    for (std::int64_t i = 0; i < f.size(); ++i)
        images[static_cast<std::size_t>(i)] = f(g(f.domain_offset() + i));
    return Permutation(f.domain_offset(), std::move(images));
}

/// Parity via the cycle decomposition: (-1)^(size - cycles), fixed points
/// counted as 1-cycles.
inline Sign sign_by_cycles(const Permutation& p) {
    const auto m = static_cast<std::size_t>(p.size());
    std::vector<bool> seen(m, false);
    std::int64_t cycles = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p(p.domain_offset() + static_cast<std::int64_t>(j)) -
                                         p.domain_offset());
        }
    }
    return Sign::pow_minus_one(p.size() - cycles);
}

struct InversionParity {
    Sign sign = Sign::positive();
    std::uint64_t inversions = 0;
};

namespace detail {

/// Merge-sort inversion count; buf is scratch of the same length.
inline std::uint64_t merge_count(std::vector<std::int64_t>& v, std::vector<std::int64_t>& buf,
                                 std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t count = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[i] <= v[j]) {
            buf[k++] = v[i++];
        } else {
            count += mid - i;
            buf[k++] = v[j++];
        }
    }
    while (i < mid) buf[k++] = v[i++];
    while (j < hi) buf[k++] = v[j++];
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
              buf.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return count;
}

}  // namespace detail

/// Parity via inversion counting (merge sort, O(m log m)). Agrees with
/// sign_by_cycles on every input; the test suite holds both to that.
inline InversionParity sign_by_inversions(const Permutation& p) {
    std::vector<std::int64_t> v(p.images().begin(), p.images().end());
    std::vector<std::int64_t> buf(v.size());
    std::uint64_t count = detail::merge_count(v, buf, 0, v.size());
    return {Sign::pow_minus_one(static_cast<std::int64_t>(count % 2)), count};
}

/// Restriction of p to an invariant subset, relabeled onto {0, ..., k-1} by
/// the order-preserving bijection. Parity is unchanged by the relabeling.
/// The subset must be strictly ascending; throws NotInvariantError if p does
/// not map it onto itself.
inline Permutation restrict(const Permutation& p, std::span<const std::int64_t> subset) {
    if (subset.empty()) throw std::invalid_argument("restrict: empty subset");
    for (std::size_t i = 0; i + 1 < subset.size(); ++i)
        if (subset[i] >= subset[i + 1])
            throw std::invalid_argument("restrict: subset must be strictly ascending");
    if (!p.contains(subset.front()) || !p.contains(subset.back()))
        throw std::invalid_argument("restrict: subset not contained in the domain");

    std::vector<std::int64_t> images(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        std::int64_t y = p(subset[i]);
        auto it = std::lower_bound(subset.begin(), subset.end(), y);
        if (it == subset.end() || *it != y)
            throw NotInvariantError("restrict: subset is not invariant under the permutation");
        images[i] = it - subset.begin();
    }
    return Permutation(0, std::move(images));
}

/// Cycle notation, e.g. "(1 2 4)(3)": cycles ordered by smallest element,
/// fixed points included.
inline std::string cycle_notation(const Permutation& p) {
    const auto m = static_cast<std::size_t>(p.size());
    std::vector<bool> seen(m, false);
    std::string out;
    for (std::size_t i = 0; i < m; ++i) {
        if (seen[i]) continue;
        out += '(';
        std::int64_t x = p.domain_offset() + static_cast<std::int64_t>(i);
        bool first = true;
        while (!seen[static_cast<std::size_t>(x - p.domain_offset())]) {
            seen[static_cast<std::size_t>(x - p.domain_offset())] = true;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = p(x);
        }
        out += ')';
    }
    return out;
}

}  // namespace zolosign
