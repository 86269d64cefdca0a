#pragma once

#include <string>
#include <vector>

namespace casimir {

/// Finite group given by its Cayley table on elements 0..n-1.
class FiniteGroup {
   public:
    /// Validates closure, associativity, a two-sided identity and inverses.
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = "table");

    const std::string& name() const { return name_; }
    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int exponent() const { return exponent_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
    bool is_abelian() const;

   private:
    std::string name_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
    int exponent_ = 1;
};

/// "C2", "C6", "Cn", "S3", "D4", "Q8", "A4". S3 is ordered
/// [e, (12), (13), (23), (123), (132)] with maps composed right to left.
FiniteGroup named_group(const std::string& name);

}  // namespace casimir
