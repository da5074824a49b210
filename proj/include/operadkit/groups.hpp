#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace operadkit {

// All recoverable failures carry a stable code (e.g. "NotAGroup", "TooLarge")
// so callers and the CLI can report them uniformly.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// Finite group given by its multiplication table. Element 0 is always the
// identity (group_from_table relabels if necessary).
class FiniteGroup {
  public:
    static constexpr int kIdentity = 0;
    static constexpr int kMaxOrder = 24;

    int order() const { return static_cast<int>(mul_.size()); }
    int op(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }

    FiniteGroup(std::vector<std::vector<int>> mul, std::vector<int> inv)
        : mul_(std::move(mul)), inv_(std::move(inv)) {}

  private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates the table (associativity, identity, inverses) and relabels so the
// identity is element 0. Throws NotAGroup / TooLarge.
GroupPtr group_from_table(const std::vector<std::vector<int>>& mul);

GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n);
// No ambient-group size guard beyond 576; used for G x Sigma_n scans.
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);
// Element (x, y) of a x b <-> index x * b->order() + y.
inline int product_pair(const GroupPtr& b, int x, int y) { return x * b->order() + y; }

struct Subgroup {
    GroupPtr group;
    std::vector<int> elements;  // sorted ascending, always contains 0

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<int> elements);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup conjugate_subgroup(const Subgroup& h, int g);  // g h g^-1
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);
bool subgroup_leq(const Subgroup& k, const Subgroup& h);  // k <= h

// All subgroups, sorted by (order, elements lexicographically).
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g);

// Left coset representatives of h in its parent: the minimal element of each
// coset, identity's coset first, remaining reps in ascending order.
std::vector<int> left_coset_reps(const Subgroup& h);
// Index i and subgroup element w with g = reps[i] * w.
std::pair<int, int> coset_decompose(const Subgroup& h, const std::vector<int>& reps, int g);

// Permutation of {0..n-1}, one-line notation: img[i] is the image of i.
struct Perm {
    std::vector<int> img;

    static Perm identity(int n);
    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }
    Perm inverse() const;
    bool is_identity() const;
    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

// (a * b)(i) = a(b(i)): apply b first.
Perm compose(const Perm& a, const Perm& b);

// All permutations of degree n in lexicographic order (identity first).
std::vector<Perm> all_perms(int n);
int perm_index(const Perm& p);  // position in the lexicographic order

}  // namespace operadkit
