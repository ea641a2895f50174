#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace equilab {

enum class Answer { yes, no, unknown };

constexpr std::string_view to_string(Answer a) {
    switch (a) {
        case Answer::yes: return "yes";
        case Answer::no: return "no";
        case Answer::unknown: return "unknown";
    }
    return "unknown";
}

constexpr Answer answer_of(bool b) { return b ? Answer::yes : Answer::no; }

/// Attached to every unknown verdict.
struct BudgetNote {
    std::string what;
    std::uint64_t limit = 0;
};

}  // namespace equilab
