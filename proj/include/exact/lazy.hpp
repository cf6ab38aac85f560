#ifndef EXACT_LAZY_HPP
#define EXACT_LAZY_HPP

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

namespace exact {

/// Shared tally of cells forced on a wrapped stream. Copies share the count.
class ForceCounter {
 public:
  ForceCounter() : count_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

  std::uint64_t value() const { return count_->load(std::memory_order_acquire); }
  void bump() const { count_->fetch_add(1, std::memory_order_acq_rel); }

 private:
  std::shared_ptr<std::atomic<std::uint64_t>> count_;
};

namespace detail {

/// A memoized codata cell. The thunk runs at most once, under the cell's
/// mutex, and is dropped afterwards so that it stops pinning its inputs.
///
/// Node must provide a free function `take_successor(Node&)` returning the
/// shared_ptr to the next cell (moved out); the destructor uses it to unlink
/// long forced chains iteratively instead of recursively.
template <class Node>
class LazyCell {
 public:
  using Thunk = std::function<Node()>;

  explicit LazyCell(Thunk thunk) : thunk_(std::move(thunk)) {}
  explicit LazyCell(Node node) : value_(std::move(node)) { ready_.store(true, std::memory_order_release); }

  LazyCell(const LazyCell&) = delete;
  LazyCell& operator=(const LazyCell&) = delete;

  ~LazyCell() {
    if (!value_) return;
    std::shared_ptr<LazyCell> next = take_successor(*value_);
    while (next && next.use_count() == 1) {
      std::shared_ptr<LazyCell> after;
      if (next->value_) after = take_successor(*next->value_);
      next = std::move(after);
    }
  }

  const Node& force() {
    if (ready_.load(std::memory_order_acquire)) return *value_;
    std::lock_guard<std::mutex> lock(mutex_);
    if (!value_) {
      value_.emplace(thunk_());
      thunk_ = nullptr;
      ready_.store(true, std::memory_order_release);
    }
    return *value_;
  }

  bool forced() const { return ready_.load(std::memory_order_acquire); }

 private:
  std::atomic<bool> ready_{false};
  std::mutex mutex_;
  Thunk thunk_;
  std::optional<Node> value_;
};

}  // namespace detail
}  // namespace exact

#endif  // EXACT_LAZY_HPP
