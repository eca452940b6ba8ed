#include "radiolab/permutation.hpp"

#include <numeric>

#include "radiolab/errors.hpp"

namespace radiolab {

Permutation::Permutation(int n) {
    if (n < 0) throw InputError("permutation size must be non-negative");
    image_.resize(n);
    std::iota(image_.begin(), image_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : image_(std::move(images)) {
    const int n = size();
    std::vector<char> hit(n + 1, 0);
    for (int v : image_) {
        if (v < 1 || v > n || hit[v]) throw InputError("image list is not a permutation of 1.." + std::to_string(n));
        hit[v] = 1;
    }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (rhs.size() != size()) throw InputError("composing permutations of different sizes");
    std::vector<int> out(size());
    for (int j = 1; j <= size(); ++j) out[j - 1] = (*this)(rhs(j));
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(size());
    for (int j = 1; j <= size(); ++j) out[(*this)(j) - 1] = j;
    return Permutation(std::move(out));
}

Permutation Permutation::pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    Permutation acc(size());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

long long Permutation::order() const {
    // lcm of cycle lengths
    std::vector<char> seen(size() + 1, 0);
    long long ord = 1;
    for (int j = 1; j <= size(); ++j) {
        if (seen[j]) continue;
        long long len = 0;
        for (int x = j; !seen[x]; x = (*this)(x)) seen[x] = 1, ++len;
        ord = std::lcm(ord, len);
    }
    return ord;
}

}  // namespace radiolab
