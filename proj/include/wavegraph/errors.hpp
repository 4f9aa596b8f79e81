#ifndef WAVEGRAPH_ERRORS_HPP
#define WAVEGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wavegraph {

// Thrown when an argument violates a documented precondition.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by the game engine when a drop would break the staircase shape.
// `column` is the offending column (1-based); `position` is the move index
// within a replayed word, or 0 for a direct drop.
struct IllegalMove : std::runtime_error {
    int column;
    int position;
    IllegalMove(int column_, int position_, const std::string& what_)
        : std::runtime_error(what_), column(column_), position(position_) {}
};

// Thrown when an operation needs a nonzero tensor.
struct EmptyTensor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation would exceed the configured state budget.
struct BudgetExceeded : std::runtime_error {
    long long limit;
    BudgetExceeded(long long limit_, const std::string& what_)
        : std::runtime_error(what_), limit(limit_) {}
};

}  // namespace wavegraph

#endif
