#ifndef EXACT_SD_STREAM_HPP
#define EXACT_SD_STREAM_HPP

#include <cstddef>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "exact/digits.hpp"
#include "exact/lazy.hpp"

namespace exact {

class SdStream;

namespace detail {
struct SdNode;
using SdCell = LazyCell<SdNode>;
std::shared_ptr<SdCell> take_successor(SdNode& node);
}  // namespace detail

/// Infinite stream of signed digits d1 d2 d3 ... denoting sum d_k 2^-k in
/// [-1, 1]. A handle onto a memoized cell; copies share the cell, and each
/// cell is computed at most once.
class SdStream {
 public:
  /// Eager cell d :: tail. Forcing it forces nothing else.
  static SdStream cons(SignedDigit head, SdStream tail);

  /// Cell whose contents are those of the stream returned by `make`, which is
  /// invoked on first access.
  template <class F>
  static SdStream defer(F make);

  static SdStream from_thunk(std::function<detail::SdNode()> thunk);

  SignedDigit head() const;
  SdStream tail() const;
  bool forced() const;

 private:
  explicit SdStream(std::shared_ptr<detail::SdCell> cell) : cell_(std::move(cell)) {}

  friend std::shared_ptr<detail::SdCell> detail::take_successor(detail::SdNode& node);

  std::shared_ptr<detail::SdCell> cell_;
};

namespace detail {

struct SdNode {
  SignedDigit head;
  SdStream tail;
};

inline std::shared_ptr<SdCell> take_successor(SdNode& node) { return std::move(node.tail.cell_); }

}  // namespace detail

inline SdStream SdStream::from_thunk(std::function<detail::SdNode()> thunk) {
  return SdStream(std::make_shared<detail::SdCell>(std::move(thunk)));
}

inline SdStream SdStream::cons(SignedDigit head, SdStream tail) {
  return SdStream(std::make_shared<detail::SdCell>(detail::SdNode{head, std::move(tail)}));
}

template <class F>
SdStream SdStream::defer(F make) {
  return from_thunk([make = std::move(make)]() -> detail::SdNode {
    SdStream s = make();
    return detail::SdNode{s.head(), s.tail()};
  });
}

inline SignedDigit SdStream::head() const { return cell_->force().head; }
inline SdStream SdStream::tail() const { return cell_->force().tail; }
inline bool SdStream::forced() const { return cell_->forced(); }

/// One corecursion step: the emitted digit, then either an existing stream to
/// splice in as the tail or the next seed.
template <class State>
struct SdStep {
  SignedDigit digit;
  std::variant<SdStream, State> next;
};

namespace detail {

template <class State, class Step>
SdStream unfold_from(State seed, std::shared_ptr<const Step> step) {
  return SdStream::from_thunk([seed = std::move(seed), step = std::move(step)]() -> SdNode {
    SdStep<State> r = (*step)(seed);
    if (auto* done = std::get_if<SdStream>(&r.next)) return SdNode{r.digit, std::move(*done)};
    return SdNode{r.digit, unfold_from(std::move(std::get<State>(r.next)), step)};
  });
}

}  // namespace detail

/// Corecursion operator for signed-digit streams: `step(state)` yields an
/// SdStep<State>. The step must be productive on every reachable state.
template <class State, class Step>
SdStream unfold_sd(State seed, Step step) {
  return detail::unfold_from(std::move(seed), std::make_shared<const Step>(std::move(step)));
}

/// First n digits; forces exactly n cells.
std::vector<SignedDigit> take_prefix(SdStream u, std::size_t n);

struct CountedSd {
  SdStream stream;
  ForceCounter counter;
};

/// Mirrors u cell for cell; the counter records how many cells have been
/// forced through the wrapper.
CountedSd with_counter(SdStream u);

}  // namespace exact

#endif  // EXACT_SD_STREAM_HPP
