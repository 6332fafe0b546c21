#include "narycat/label_choices.hpp"

namespace narycat {

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        int missing = k - static_cast<int>(cur.size());
        for (int v = next; v <= n - missing + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::vector<int>> compositions_lex(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (total < 0)
        return out;
    if (parts <= 0) {
        if (total == 0)
            out.emplace_back();
        return out;
    }
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == parts - 1) {
            cur[idx] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

} // namespace narycat
