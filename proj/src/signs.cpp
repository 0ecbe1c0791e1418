#include "webkup/signs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace webkup {

SignString parse_sign_string(const std::string& text) {
    SignString s;
    for (char c : text) {
        if (c == '+') s.push_back(Sign::Plus);
        else if (c == '-') s.push_back(Sign::Minus);
        else throw WebError("sign string: unexpected character '" + std::string(1, c) + "' in '" + text + "'");
    }
    return s;
}

EnhancedSignString parse_enhanced_sign_string(const std::string& text) {
    EnhancedSignString s;
    for (char c : text) {
        switch (c) {
            case 'o': s.push_back(Symbol::Empty); break;
            case '+': s.push_back(Symbol::Plus); break;
            case '-': s.push_back(Symbol::Minus); break;
            case 'x': s.push_back(Symbol::Full); break;
            default:
                throw WebError("enhanced sign string: unexpected character '" + std::string(1, c) + "' in '" +
                               text + "'");
        }
    }
    return s;
}

StateString parse_state_string(const std::string& text) {
    StateString j;
    for (char c : text) {
        if (c == '1') j.push_back(1);
        else if (c == '0') j.push_back(0);
        else if (c == 'm') j.push_back(-1);
        else throw WebError("state string: unexpected character '" + std::string(1, c) + "' in '" + text + "'");
    }
    return j;
}

std::string to_string(const SignString& s) {
    std::string out;
    for (Sign x : s) out += x == Sign::Plus ? '+' : '-';
    return out;
}

std::string to_string(const EnhancedSignString& s) {
    static const char chars[] = {'o', '+', '-', 'x'};
    std::string out;
    for (Symbol x : s) out += chars[label_of(x)];
    return out;
}

std::string state_to_string(const StateString& j) {
    std::string out;
    for (int x : j) {
        if (x == 1) out += '1';
        else if (x == 0) out += '0';
        else if (x == -1) out += 'm';
        else throw WebError("state string: entry out of range");
    }
    return out;
}

EnhancedSignString enhance(const SignString& s) {
    EnhancedSignString e;
    for (Sign x : s) e.push_back(x == Sign::Plus ? Symbol::Plus : Symbol::Minus);
    return e;
}

SignString hat(const EnhancedSignString& s) {
    SignString out;
    for (Symbol x : s) {
        if (x == Symbol::Plus) out.push_back(Sign::Plus);
        else if (x == Symbol::Minus) out.push_back(Sign::Minus);
    }
    return out;
}

int label_of(Symbol s) { return static_cast<int>(s); }

Symbol symbol_of_label(int label) {
    if (label < 0 || label > 3) throw WebError("strand label out of range: " + std::to_string(label));
    return static_cast<Symbol>(label);
}

Sign sign_of_label(int label) {
    if (label == 1) return Sign::Plus;
    if (label == 2) return Sign::Minus;
    throw WebError("only labels 1 and 2 carry a sign");
}

GlWeight weight_of_sign_string(const EnhancedSignString& s) {
    GlWeight mu;
    for (Symbol x : s) mu.push_back(label_of(x));
    return mu;
}

GlWeight weight_of_sign_string(const SignString& s) { return weight_of_sign_string(enhance(s)); }

EnhancedSignString sign_string_of_weight(const GlWeight& mu) {
    EnhancedSignString s;
    for (int x : mu) s.push_back(symbol_of_label(x));
    return s;
}

GlWeight hat_weight(const GlWeight& mu) {
    GlWeight out;
    for (int x : mu)
        if (x == 1 || x == 2) out.push_back(x);
    return out;
}

int weight_sum(const GlWeight& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

bool in_lambda(const GlWeight& mu, int n, int d) {
    if (static_cast<int>(mu.size()) != n) return false;
    if (std::any_of(mu.begin(), mu.end(), [](int x) { return x < 0; })) return false;
    return weight_sum(mu) == d;
}

bool in_lambda_plus(const GlWeight& mu, int n, int d) {
    return in_lambda(mu, n, d) && std::is_sorted(mu.begin(), mu.end(), std::greater<int>());
}

bool in_lambda_3(const GlWeight& mu, int n, int d) {
    return in_lambda(mu, n, d) && std::all_of(mu.begin(), mu.end(), [](int x) { return x <= 3; });
}

bool in_lambda_12(const GlWeight& mu, int n, int d) {
    return in_lambda(mu, n, d) && std::all_of(mu.begin(), mu.end(), [](int x) { return x == 1 || x == 2; });
}

std::vector<GlWeight> lambda_3(int n, int d) {
    std::vector<GlWeight> out;
    GlWeight cur;
    std::function<void(int)> rec = [&](int left) {
        int pos = static_cast<int>(cur.size());
        if (pos == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int x = std::min(3, left); x >= 0; --x) {
            if (left - x > 3 * (n - pos - 1)) break;
            cur.push_back(x);
            rec(left - x);
            cur.pop_back();
        }
    };
    if (n >= 0 && d >= 0) rec(d);
    return out;
}

bool state_less(const StateString& a, const StateString& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<StateString> all_state_strings(std::size_t n) {
    std::vector<StateString> out;
    StateString cur(n, 1);
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == -1) {
            cur[i - 1] = 1;
            --i;
        }
        if (i == 0) break;
        --cur[i - 1];
    }
    return out;
}

std::vector<SignString> all_sign_strings(std::size_t n) {
    std::vector<SignString> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        SignString s;
        for (std::size_t i = 0; i < n; ++i) s.push_back((m >> (n - 1 - i)) & 1u ? Sign::Minus : Sign::Plus);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace webkup
