#ifndef EXACT_STACK_HPP
#define EXACT_STACK_HPP

#include <cstddef>
#include <functional>

namespace exact {

// Forcing a digit deep inside nested stream transformers (division after
// thousands of steps) recurses once per nesting level, so long runs need more
// than the default thread stack.
inline constexpr std::size_t kDefaultDeepStack = std::size_t{1} << 30;

/// Runs `task` to completion on a fresh thread with the given stack size and
/// rethrows anything it throws.
void run_with_stack(const std::function<void()>& task, std::size_t stack_bytes = kDefaultDeepStack);

}  // namespace exact

#endif  // EXACT_STACK_HPP
