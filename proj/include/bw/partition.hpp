#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace bw {

/* A partition is stored as its weakly decreasing positive parts; trailing
 * zeros are dropped on construction so equality is structural. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text form "(5,4,2,2,1)"; input also accepts "^k" exponents.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    long long size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-indexed; 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    long long size_ = 0;
};

/* Cells are 1-indexed: (row, col) with row <= length and col <= part(row). */
struct Cell {
    int row = 1;
    int col = 1;
    bool operator==(const Cell&) const = default;
};

struct HookData {
    Cell corner;
    int length = 0;
    std::vector<Cell> rim_cells;
};

bool in_diagram(const Partition& lam, Cell c);

Partition conjugate(const Partition& lam);
bool is_self_conjugate(const Partition& lam);

// Throws std::out_of_range if the cell is not in the diagram.
int hook_length(const Partition& lam, Cell c);
HookData hook_data(const Partition& lam, Cell c);
Partition remove_rim_hook(const Partition& lam, Cell c);

/* e-core by repeated removal of the e-hook with the largest corner row
 * (ties broken by largest column); the result is order-independent. */
Partition e_core(const Partition& lam, int e);
long long e_weight(const Partition& lam, int e);

// Hook lengths on the main diagonal, (h_11, h_22, ...).
Partition diagonal_hooks(const Partition& lam);

/* Visits every partition of n exactly once in lexicographically
 * decreasing order, starting from (n). */
template <typename F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n < 0");
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> a{n};
    for (;;) {
        visit(Partition(a));
        int i = static_cast<int>(a.size()) - 1;
        while (i >= 0 && a[i] == 1) --i;
        if (i < 0) return;
        int val = a[i] - 1;
        int total = a[i] + static_cast<int>(a.size()) - 1 - i;
        a.resize(i);
        while (total > 0) {
            int part = std::min(val, total);
            a.push_back(part);
            total -= part;
        }
    }
}

std::vector<Partition> all_partitions(int n);

}  // namespace bw
