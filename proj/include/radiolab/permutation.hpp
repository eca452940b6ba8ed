#pragma once

#include <initializer_list>
#include <vector>

namespace radiolab {

/// Bijection on {1..N}, stored as its image table.
///
/// Composition follows function notation: (a * b)(j) = a(b(j)), so `b` is
/// applied first.
class Permutation {
public:
    /// Identity on {1..n}.
    explicit Permutation(int n);
    /// Image list: images[j-1] = pi(j). Throws InputError unless bijective.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int j) const { return image_.at(j - 1); }
    const std::vector<int>& images() const { return image_; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    /// pi^e for any integer e (negative powers use the inverse).
    Permutation pow(long long e) const;
    /// Smallest e >= 1 with pi^e = id.
    long long order() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

}  // namespace radiolab
