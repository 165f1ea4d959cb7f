#pragma once

#include <compare>
#include <string>
#include <vector>

namespace paratopia {

class CycleStructure;

// Permutation of {1..n} stored as an image table. Permutations act on the
// right: p[i] is the image of i, and (p*q)[i] == q[p[i]].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);  // identity
    static Permutation from_images(std::vector<int> images);
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
    // Accepts either a one-line image list "2 3 1" or cycle form "(1 2 3)(4)".
    // degree_hint extends a cycle-form permutation with fixed points up to
    // the hinted degree.
    static Permutation parse(const std::string& text, int degree_hint = 0);

    int degree() const { return (int)img_.size(); }
    int operator[](int i) const { return img_[i - 1]; }  // 1-based

    Permutation operator*(const Permutation& q) const;  // this first, then q
    Permutation inverse() const;
    Permutation power(long long k) const;

    // Disjoint cycles; each cycle starts at its least point, cycles ordered
    // by least point. Fixed points included as 1-cycles.
    std::vector<std::vector<int>> cycles() const;
    CycleStructure cycle_structure() const;
    int cycle_length_of(int i) const;
    long long order() const;
    int fixed_point_count() const;
    bool is_identity() const;

    std::string image_str() const;
    std::string cycle_str() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

// Multiset of cycle lengths as (length, multiplicity) pairs with strictly
// decreasing lengths. Text grammar: terms joined by '.', each "c" or "c^m",
// e.g. "4^2.2.1^6".
class CycleStructure {
public:
    struct Part {
        int length = 0;
        int multiplicity = 0;
        bool operator==(const Part&) const = default;
    };

    CycleStructure() = default;
    explicit CycleStructure(std::vector<Part> parts);  // validates ordering
    static CycleStructure parse(const std::string& text);

    const std::vector<Part>& parts() const { return parts_; }
    int degree() const;
    int multiplicity_of(int length) const;
    int fixed_points() const { return multiplicity_of(1); }
    int cycle_count() const;
    long long order() const;  // lcm of the lengths
    bool semi_regular() const { return parts_.size() == 1; }
    std::vector<int> expanded() const;  // lengths with multiplicity, descending
    std::string str() const;

    bool operator==(const CycleStructure&) const = default;
    // Natural lexicographic order on the expanded descending part list; the
    // partitions() enumeration walks this order from largest to smallest.
    bool operator<(const CycleStructure& o) const { return expanded() < o.expanded(); }

private:
    std::vector<Part> parts_;
};

// The unique canonical permutation with the given structure: cycles of the
// form (i, i+1, ..., i+c-1), longest first, leading symbols increasing.
Permutation canonical_permutation(const CycleStructure& cs);

// All integer partitions of n, each as a CycleStructure, in descending
// lexicographic order on the part lists: n first, 1^n last.
std::vector<CycleStructure> partitions(int n);

long long lcm2(long long a, long long b);

}  // namespace paratopia
