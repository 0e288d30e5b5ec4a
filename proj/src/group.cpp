#include "group.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace tcsd {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels, std::vector<int> table) {
    FiniteGroup g;
    g.order_ = static_cast<int>(labels.size());
    require(g.order_ >= 1, ErrorKind::Structure, "group must have at least one element");
    require(static_cast<int>(table.size()) == g.order_ * g.order_, ErrorKind::Structure,
            "Cayley table has wrong size");
    for (int v : table)
        require(v >= 0 && v < g.order_, ErrorKind::Structure, "Cayley table entry out of range");
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);

    int n = g.order_;
    // Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            int r = g.table_[a * n + b], c = g.table_[b * n + a];
            require(!row[r] && !col[c], ErrorKind::Structure,
                    "Cayley table is not a Latin square");
            row[r] = col[c] = true;
        }
    }
    // identity
    g.identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = g.table_[e * n + a] == a && g.table_[a * n + e] == a;
        if (ok) {
            g.identity_ = e;
            break;
        }
    }
    require(g.identity_ >= 0, ErrorKind::Structure, "Cayley table has no identity");
    // inverses
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.table_[a * n + b] == g.identity_ && g.table_[b * n + a] == g.identity_) {
                g.inverse_[a] = b;
                break;
            }
        }
        require(g.inverse_[a] >= 0, ErrorKind::Structure, "Cayley table element has no inverse");
    }
    // associativity, exhaustive
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                    std::ostringstream msg;
                    msg << "Cayley table is not associative at (" << g.labels_[a] << ", "
                        << g.labels_[b] << ", " << g.labels_[c] << ")";
                    fail(ErrorKind::Structure, msg.str());
                }
            }
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    require(n >= 1, ErrorKind::Structure, "cyclic group order must be positive");
    std::vector<std::string> labels(n);
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a) {
        labels[a] = "g" + std::to_string(a);
        for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    }
    labels[0] = "e";
    return from_table(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    int n = g.order() * h.order();
    std::vector<std::string> labels(n);
    std::vector<int> table(n * n);
    auto idx = [&](int a, int b) { return a * h.order() + b; };
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) {
            labels[idx(a, b)] = "(" + g.label(a) + "," + h.label(b) + ")";
            for (int c = 0; c < g.order(); ++c)
                for (int d = 0; d < h.order(); ++d)
                    table[idx(a, b) * n + idx(c, d)] = idx(g.mul(a, c), h.mul(b, d));
        }
    return from_table(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
    // permutations of {0,1,2}, composed as (p∘q)(i) = p(q(i))
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1},
    }};
    const std::array<const char*, 6> names = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
    auto find = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    std::vector<std::string> labels(names.begin(), names.end());
    std::vector<int> table(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> comp{};
            for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
            table[a * 6 + b] = find(comp);
        }
    return from_table(std::move(labels), std::move(table));
}

int FiniteGroup::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    require(it != labels_.end(), ErrorKind::InvalidArgument, "unknown group element: " + label);
    return static_cast<int>(it - labels_.begin());
}

}  // namespace tcsd
