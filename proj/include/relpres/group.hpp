#pragma once

#include <vector>

#include "relpres/error.hpp"

namespace relpres {

// A finite group given by its full multiplication table. The identity is
// always the element of index 0; the table is validated exhaustively on
// construction (associativity over all triples, identity row/column,
// inverses).
class Group {
 public:
  static Group from_table(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error("NoIdentityAtZero", "empty table");
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n)
        throw Error("NoIdentityAtZero", "table is not square");
      for (int x : row) {
        if (x < 0 || x >= n) throw Error("NoIdentityAtZero", "entry out of range");
      }
    }
    for (int a = 0; a < n; ++a) {
      if (table[0][a] != a || table[a][0] != a)
        throw Error("NoIdentityAtZero", "index 0 is not an identity");
    }
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (table[a][b] == 0) inv[a] = b;
      }
      if (inv[a] == -1) throw Error("NoInverse", "element " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw Error("NonAssociative", "triple (" + std::to_string(a) + "," +
                                               std::to_string(b) + "," + std::to_string(c) + ")");
    Group g;
    g.table_ = std::move(table);
    g.inv_ = std::move(inv);
    return g;
  }

  static Group cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t));
  }

  // S3 as permutations of {0,1,2}; element 0 is the identity.
  static Group symmetric3() {
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto index_of = [&](const int p[3]) {
      for (int i = 0; i < 6; ++i)
        if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
      return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        int c[3];
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        t[b][a] = index_of(c);  // row*col = apply col first
      }
    return from_table(std::move(t));
  }

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inv_[a]; }

  int element_order(int a) const {
    int x = a, n = 1;
    while (x != 0) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  bool has_involution() const {
    for (int a = 1; a < order(); ++a)
      if (element_order(a) == 2) return true;
    return false;
  }

  // Minimal order of a nonidentity element (the quantity bounded by the
  // small-order corollary). Undefined for the trivial group.
  int min_nonidentity_order() const {
    int m = 0;
    for (int a = 1; a < order(); ++a) {
      int o = element_order(a);
      if (m == 0 || o < m) m = o;
    }
    return m;
  }

  const std::vector<std::vector<int>>& table() const { return table_; }

  // default-constructed: the trivial group
  Group() : table_{{0}}, inv_{0} {}

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

}  // namespace relpres
