#include "modsub/words.hpp"

namespace modsub {

namespace {

void check_alphabet(std::string_view w) {
    for (char c : w)
        if (c != 'a' && c != 'A' && c != 'b' && c != 'B')
            throw PreconditionError(std::string("word: illegal letter '") + c + "'");
}

} // namespace

std::string normalize_word(std::string_view w) {
    check_alphabet(w);
    std::string out;
    out.reserve(w.size());
    for (char raw : w) {
        char c = (raw == 'A') ? 'a' : raw;
        // each push rewrites against the current top until nothing applies
        while (true) {
            if (out.empty()) {
                out.push_back(c);
                break;
            }
            char t = out.back();
            if ((t == 'a' && c == 'a') || (t == 'b' && c == 'B') || (t == 'B' && c == 'b')) {
                out.pop_back();
                break; // pair cancelled, letter consumed
            }
            if (t == 'b' && c == 'b') {
                out.pop_back();
                c = 'B';
                continue;
            }
            if (t == 'B' && c == 'B') {
                out.pop_back();
                c = 'b';
                continue;
            }
            out.push_back(c);
            break;
        }
    }
    return out;
}

bool is_normal_word(std::string_view w) {
    for (char c : w)
        if (c != 'a' && c != 'b' && c != 'B') return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        bool prev_a = w[i - 1] == 'a';
        bool cur_a = w[i] == 'a';
        if (prev_a == cur_a) return false; // letters must alternate a vs {b,B}
    }
    return true;
}

bool member(const Graph& g, std::string_view w) {
    auto root = g.root();
    if (!root) throw PreconditionError("member: graph has no root");
    std::string nf = normalize_word(w);
    Label cur = *root;
    for (char c : nf) {
        if (c == 'a') {
            if (g.has_a_loop(cur)) continue;
            if (auto p = g.a_partner(cur)) {
                cur = *p;
                continue;
            }
            return false;
        }
        if (g.has_b_loop(cur)) continue; // b and B both absorbed
        if (c == 'b') {
            if (auto nxt = g.b_next(cur)) {
                cur = *nxt;
                continue;
            }
        } else {
            if (auto prv = g.b_prev(cur)) {
                cur = *prv;
                continue;
            }
        }
        return false;
    }
    return cur == *root;
}

} // namespace modsub
