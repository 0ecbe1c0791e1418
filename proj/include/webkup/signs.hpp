#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace webkup {

// Malformed web data: bad boundary strings, out-of-range labels, mismatched gluing.
class WebError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };
// Boundary symbols of an enhanced sign string; the value is the strand label.
enum class Symbol : std::int8_t { Empty = 0, Plus = 1, Minus = 2, Full = 3 };

using SignString = std::vector<Sign>;
using EnhancedSignString = std::vector<Symbol>;
// Entries in {-1, 0, 1}.
using StateString = std::vector<int>;
// Entries are strand labels, nonnegative.
using GlWeight = std::vector<int>;

// Text forms: signs use + and -, enhanced signs add o and x, states use 1, 0, m.
SignString parse_sign_string(const std::string& text);
EnhancedSignString parse_enhanced_sign_string(const std::string& text);
StateString parse_state_string(const std::string& text);
std::string to_string(const SignString& s);
std::string to_string(const EnhancedSignString& s);
std::string state_to_string(const StateString& j);

EnhancedSignString enhance(const SignString& s);
SignString hat(const EnhancedSignString& s);
// Label 0..3 of a symbol and back.
int label_of(Symbol s);
Symbol symbol_of_label(int label);
Sign sign_of_label(int label);
GlWeight weight_of_sign_string(const EnhancedSignString& s);
GlWeight weight_of_sign_string(const SignString& s);
EnhancedSignString sign_string_of_weight(const GlWeight& mu);
// Drops the 0 and 3 entries.
GlWeight hat_weight(const GlWeight& mu);

int weight_sum(const GlWeight& mu);
// Lambda(n,d): compositions of d with n parts.
bool in_lambda(const GlWeight& mu, int n, int d);
// Lambda^+(n,d): nonincreasing compositions.
bool in_lambda_plus(const GlWeight& mu, int n, int d);
// Lambda(n,d)_3: entries at most 3.
bool in_lambda_3(const GlWeight& mu, int n, int d);
// Lambda(n,d)_{1,2}: entries in {1,2}.
bool in_lambda_12(const GlWeight& mu, int n, int d);
// All members of Lambda(n,d)_3 in lexicographically decreasing order.
std::vector<GlWeight> lambda_3(int n, int d);

// The lexicographic order on state strings, left to right with 1 > 0 > -1.
bool state_less(const StateString& a, const StateString& b);

// All state strings of length n, in decreasing lexicographic order.
std::vector<StateString> all_state_strings(std::size_t n);
// All sign strings of length n, + before - position by position.
std::vector<SignString> all_sign_strings(std::size_t n);

}  // namespace webkup
