#pragma once

#include "error.hpp"

#include <string>
#include <vector>

namespace tcsd {

/// Finite group given by its Cayley table. The table is validated exhaustively
/// (Latin square, identity, inverses, associativity) at construction.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::string> labels, std::vector<int> table);

    static FiniteGroup cyclic(int n);
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
    static FiniteGroup symmetric3();

    int order() const { return order_; }
    int mul(int g, int h) const { return table_[g * order_ + h]; }
    int inv(int g) const { return inverse_[g]; }
    int id() const { return identity_; }
    const std::string& label(int g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& table() const { return table_; }
    int index_of(const std::string& label) const;

private:
    FiniteGroup() = default;

    int order_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

}  // namespace tcsd
