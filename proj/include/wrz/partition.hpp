#ifndef WRZ_PARTITION_HPP
#define WRZ_PARTITION_HPP

#include <string>
#include <vector>

#include "wrz/errors.hpp"

namespace wrz {

/// Partition in nondecreasing order, zero parts allowed. A zero prefix is
/// meaningful: it selects the low consecutive degrees of the sequence.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;

    /// Leading zeros trimmed; the all-zero partition normalizes to (0).
    Partition normalized() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    std::vector<int> parts_;
};

/// Strictly increasing degree selection k_1 < ... < k_l.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> indices);

    const std::vector<int>& indices() const { return idx_; }
    int length() const { return static_cast<int>(idx_.size()); }
    bool contains(int m) const;

private:
    std::vector<int> idx_;
};

// k_j = lambda_j + j - 1 and its inverse.
MultiIndex multiindex_from_partition(const Partition& lam);
Partition partition_from_multiindex(const MultiIndex& k);

/// Transpose of the Young diagram, in the nondecreasing convention.
Partition conjugate(const Partition& lam);

/// Conjugate of the doubled partition (mu_1,mu_1,...,mu_n,mu_n) in closed
/// form: (2 repeated mu_n-mu_{n-1} times, 4 repeated mu_{n-1}-mu_{n-2},
/// ..., 2n repeated mu_1 times).
Partition doubled_conjugate(const std::vector<int>& mu);

/// (mu_1, mu_1, ..., mu_n, mu_n) for strictly increasing positive mu.
Partition doubled_partition(const std::vector<int>& mu);

/// (#odd k_j) - (#even k_j) over the multi-index of lam.
int d_lambda(const Partition& lam);

std::string to_string(const Partition& lam);
std::string to_string(const MultiIndex& k);

/// CLI forms: "1,3" (partition) or "k=1,4" (multi-index).
Partition parse_partition(const std::string& text);

/// "1,3" -> strictly increasing positive list; used for --mu.
std::vector<int> parse_int_list(const std::string& text);

} // namespace wrz

#endif
