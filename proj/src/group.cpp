#include "casimir/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "casimir/error.hpp"

namespace casimir {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
    const int n = static_cast<int>(table.size());
    require(n >= 1, ErrorKind::InvalidInput, "empty group table");
    for (const auto& row : table) {
        require(static_cast<int>(row.size()) == n, ErrorKind::InvalidInput, "group table is not square");
        for (int v : row) require(v >= 0 && v < n, ErrorKind::InvalidInput, "group table entry out of range");
    }
    FiniteGroup g;
    g.name_ = std::move(name);
    g.table_ = std::move(table);
    g.identity_ = -1;
    for (int e = 0; e < n && g.identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
        if (ok) g.identity_ = e;
    }
    require(g.identity_ >= 0, ErrorKind::InvalidInput, "group table has no identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                require(g.table_[g.table_[a][b]][c] == g.table_[a][g.table_[b][c]], ErrorKind::InvalidInput,
                        "group table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(c) + ")");
    g.inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) g.inverse_[a] = b;
        require(g.inverse_[a] >= 0, ErrorKind::InvalidInput, "element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a) {
        int k = 1, x = a;
        while (x != g.identity_) {
            x = g.table_[x][a];
            ++k;
        }
        g.exponent_ = std::lcm(g.exponent_, k);
    }
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& g, const Perm& h) {
    Perm r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[h[i]];
    return r;
}

FiniteGroup from_permutations(const std::vector<Perm>& elems, const std::string& name) {
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            auto it = index.find(compose(elems[i], elems[j]));
            require(it != index.end(), ErrorKind::Internal, "permutation set not closed");
            table[i][j] = it->second;
        }
    return FiniteGroup::from_table(std::move(table), name);
}

/// Closure of the generators, sorted by image tuple (identity first).
std::vector<Perm> generate(const std::vector<Perm>& gens) {
    Perm id(gens.front().size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : gens) {
            Perm p = compose(elems[i], s);
            if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

FiniteGroup cyclic(int n) {
    require(n >= 1, ErrorKind::InvalidInput, "cyclic group order must be positive");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(t), "C" + std::to_string(n));
}

FiniteGroup quaternion() {
    // elements (sign, unit) with unit 0..3 = 1, i, j, k; index 2*unit + (sign < 0)
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, ub = b / 2;
            int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_mul[ua][ub];
            t[a][b] = 2 * unit_mul[ua][ub] + (s < 0 ? 1 : 0);
        }
    return FiniteGroup::from_table(std::move(t), "Q8");
}

}  // namespace

FiniteGroup named_group(const std::string& name) {
    if (name == "S3")
        return from_permutations({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}, "S3");
    if (name == "D4") return from_permutations(generate({{1, 2, 3, 0}, {0, 3, 2, 1}}), "D4");
    if (name == "A4") return from_permutations(generate({{1, 2, 0, 3}, {1, 0, 3, 2}}), "A4");
    if (name == "Q8") return quaternion();
    if (name.size() >= 2 && name[0] == 'C' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return cyclic(std::stoi(name.substr(1)));
    fail(ErrorKind::InvalidInput, "unknown group name '" + name + "'");
}

}  // namespace casimir
