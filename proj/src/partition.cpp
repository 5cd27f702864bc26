#include "wrz/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wrz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw parameter_error("a partition needs at least one part");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw parameter_error("partition parts must be nonnegative");
        if (i > 0 && parts_[i] < parts_[i - 1])
            throw parameter_error("partition parts must be nondecreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::normalized() const {
    size_t first = 0;
    while (first + 1 < parts_.size() && parts_[first] == 0) ++first;
    if (parts_[first] == 0) return Partition({0});
    return Partition(std::vector<int>(parts_.begin() + static_cast<long>(first), parts_.end()));
}

MultiIndex::MultiIndex(std::vector<int> indices) : idx_(std::move(indices)) {
    if (idx_.empty())
        throw parameter_error("a multi-index needs at least one entry");
    for (size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 0)
            throw parameter_error("multi-index entries must be nonnegative");
        if (i > 0 && idx_[i] <= idx_[i - 1])
            throw not_increasing_error();
    }
}

bool MultiIndex::contains(int m) const {
    return std::binary_search(idx_.begin(), idx_.end(), m);
}

MultiIndex multiindex_from_partition(const Partition& lam) {
    std::vector<int> k;
    k.reserve(lam.parts().size());
    for (size_t j = 0; j < lam.parts().size(); ++j)
        k.push_back(lam.parts()[j] + static_cast<int>(j));
    return MultiIndex(std::move(k));
}

Partition partition_from_multiindex(const MultiIndex& k) {
    std::vector<int> parts;
    parts.reserve(k.indices().size());
    for (size_t j = 0; j < k.indices().size(); ++j)
        parts.push_back(k.indices()[j] - static_cast<int>(j));
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lam) {
    Partition n = lam.normalized();
    if (n.parts().back() == 0) return Partition({0});
    // Work on the conventional nonincreasing form; transpose; flip back.
    std::vector<int> rows(n.parts().rbegin(), n.parts().rend());
    int cols = rows.front();
    std::vector<int> transposed(static_cast<size_t>(cols), 0);
    for (int r : rows)
        for (int j = 0; j < r; ++j) ++transposed[static_cast<size_t>(j)];
    std::reverse(transposed.begin(), transposed.end());
    return Partition(std::move(transposed));
}

Partition doubled_partition(const std::vector<int>& mu) {
    if (mu.empty()) throw parameter_error("mu must be nonempty");
    std::vector<int> parts;
    parts.reserve(mu.size() * 2);
    for (size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0) throw parameter_error("mu entries must be positive");
        if (i > 0 && mu[i] <= mu[i - 1]) throw not_increasing_error();
        parts.push_back(mu[i]);
        parts.push_back(mu[i]);
    }
    return Partition(std::move(parts));
}

Partition doubled_conjugate(const std::vector<int>& mu) {
    if (mu.empty()) throw parameter_error("mu must be nonempty");
    for (size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0) throw parameter_error("mu entries must be positive");
        if (i > 0 && mu[i] <= mu[i - 1]) throw not_increasing_error();
    }
    int n = static_cast<int>(mu.size());
    std::vector<int> parts;
    for (int i = n - 1; i >= 0; --i) {
        int run = (i == 0) ? mu[0] : mu[static_cast<size_t>(i)] - mu[static_cast<size_t>(i) - 1];
        int value = 2 * (n - i);
        for (int t = 0; t < run; ++t) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

int d_lambda(const Partition& lam) {
    MultiIndex k = multiindex_from_partition(lam);
    int odd = 0, even = 0;
    for (int kj : k.indices())
        (kj % 2 == 1 ? odd : even)++;
    return odd - even;
}

std::string to_string(const Partition& lam) {
    std::string s;
    for (size_t i = 0; i < lam.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lam.parts()[i]);
    }
    return s;
}

std::string to_string(const MultiIndex& k) {
    std::string s;
    for (size_t i = 0; i < k.indices().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k.indices()[i]);
    }
    return s;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw parameter_error("empty entry in list '" + text + "'");
        tok = tok.substr(b, e - b + 1);
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parameter_error("bad integer '" + tok + "' in '" + text + "'");
        }
    }
    if (out.empty()) throw parameter_error("empty list '" + text + "'");
    return out;
}

Partition parse_partition(const std::string& text) {
    if (text.rfind("k=", 0) == 0) {
        MultiIndex k(parse_int_list(text.substr(2)));
        return partition_from_multiindex(k);
    }
    return Partition(parse_int_list(text));
}

} // namespace wrz
