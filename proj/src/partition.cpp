#include "bw/partition.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace bw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::parse(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("Partition::parse: " + why + " in \"" + text + "\"");
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> parts;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
        ++pos;
    } else {
        for (;;) {
            int value = read_int();
            int repeat = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                repeat = read_int();
                if (repeat < 1) fail("exponent must be positive");
                skip_ws();
            }
            for (int i = 0; i < repeat; ++i) parts.push_back(value);
            if (pos >= text.size()) fail("unterminated list");
            if (text[pos] == ')') { ++pos; break; }
            if (text[pos] != ',') fail("expected ',' or ')'");
            ++pos;
        }
    }
    skip_ws();
    if (pos != text.size()) fail("trailing characters");
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

bool in_diagram(const Partition& lam, Cell c) {
    return c.row >= 1 && c.col >= 1 && c.row <= lam.length() && c.col <= lam.part(c.row);
}

Partition conjugate(const Partition& lam) {
    std::vector<int> cols;
    if (!lam.empty()) {
        cols.resize(lam.parts()[0]);
        for (int p : lam.parts())
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& lam) { return conjugate(lam) == lam; }

namespace {

// Number of rows with part >= col (the conjugate part lambda'_col).
int column_length(const Partition& lam, int col) {
    int count = 0;
    for (int p : lam.parts()) {
        if (p >= col) ++count;
        else break;
    }
    return count;
}

void require_cell(const Partition& lam, Cell c) {
    if (!in_diagram(lam, c))
        throw std::out_of_range("cell (" + std::to_string(c.row) + "," +
                                std::to_string(c.col) + ") not in diagram of " + lam.to_string());
}

}  // namespace

int hook_length(const Partition& lam, Cell c) {
    require_cell(lam, c);
    return (lam.part(c.row) - c.col) + (column_length(lam, c.col) - c.row) + 1;
}

HookData hook_data(const Partition& lam, Cell c) {
    require_cell(lam, c);
    HookData hd;
    hd.corner = c;
    hd.length = hook_length(lam, c);
    // Walk the rim from the end of the arm to the foot of the leg.
    int q = column_length(lam, c.col);
    int r = c.row, col = lam.part(c.row);
    for (;;) {
        hd.rim_cells.push_back({r, col});
        if (r == q && col == c.col) break;
        if (r < lam.length() && lam.part(r + 1) >= col) ++r;
        else --col;
    }
    return hd;
}

Partition remove_rim_hook(const Partition& lam, Cell c) {
    require_cell(lam, c);
    int q = column_length(lam, c.col);
    std::vector<int> parts = lam.parts();
    for (int k = c.row; k < q; ++k) parts[k - 1] = lam.part(k + 1) - 1;
    parts[q - 1] = c.col - 1;
    return Partition(std::move(parts));
}

Partition e_core(const Partition& lam, int e) {
    if (e < 1) throw std::invalid_argument("e_core: e must be >= 1");
    Partition cur = lam;
    for (;;) {
        Cell found{0, 0};
        for (int i = cur.length(); i >= 1 && found.row == 0; --i)
            for (int j = cur.part(i); j >= 1; --j)
                if (hook_length(cur, {i, j}) == e) { found = {i, j}; break; }
        if (found.row == 0) return cur;
        cur = remove_rim_hook(cur, found);
    }
}

long long e_weight(const Partition& lam, int e) {
    return (lam.size() - e_core(lam, e).size()) / e;
}

Partition diagonal_hooks(const Partition& lam) {
    std::vector<int> hooks;
    for (int i = 1; in_diagram(lam, {i, i}); ++i)
        hooks.push_back(hook_length(lam, {i, i}));
    return Partition(std::move(hooks));
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace bw
