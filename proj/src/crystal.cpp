#include "yw/crystal.hpp"

namespace yw {

std::string column_signature(const Wall& w, int col, int i) {
    std::string sig;
    std::optional<Wall> cur = w;
    for (int r = 0; r < 2; ++r) {
        cur = remove_block(*cur, col, i);
        if (!cur) break;
        sig += '-';
    }
    cur = w;
    for (int a = 0; a < 2; ++a) {
        cur = add_block(*cur, col, i);
        if (!cur) break;
        sig += '+';
    }
    return sig;
}

std::vector<Sign> signature(const Wall& w, int i) {
    std::vector<Sign> st;
    for (int k = w.size() + 1; k >= 0; --k) {
        for (char ch : column_signature(w, k, i)) {
            if (ch == '-' && !st.empty() && st.back().ch == '+') st.pop_back();
            else st.push_back({ch, k});
        }
    }
    return st;
}

std::optional<Wall> f(const Wall& w, int i) {
    for (const Sign& s : signature(w, i))
        if (s.ch == '+') return add_block(w, s.col, i);
    return std::nullopt;
}

std::optional<Wall> e(const Wall& w, int i) {
    auto sg = signature(w, i);
    for (auto it = sg.rbegin(); it != sg.rend(); ++it)
        if (it->ch == '-') return remove_block(w, it->col, i);
    return std::nullopt;
}

int epsilon(const Wall& w, int i) {
    int k = 0;
    for (const Sign& s : signature(w, i)) k += s.ch == '-';
    return k;
}

int phi(const Wall& w, int i) {
    int k = 0;
    for (const Sign& s : signature(w, i)) k += s.ch == '+';
    return k;
}

} // namespace yw
