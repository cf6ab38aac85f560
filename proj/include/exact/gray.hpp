#ifndef EXACT_GRAY_HPP
#define EXACT_GRAY_HPP

#include <cstddef>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "exact/digits.hpp"
#include "exact/lazy.hpp"

namespace exact {

// Gray code (binary reflected code) with delay, as two mutually corecursive
// codata types:
//
//   mode G:  Lr(d, g)  denotes -d (x_g - 1) / 2      U(h) denotes x_h / 2
//   mode H:  Fin(d, g) denotes  d (x_g + 1) / 2      D(h) denotes x_h / 2
//
// Both modes share one cell type; GrayG and GrayH are distinct handles whose
// accessors keep the constructor typing (Lr/Fin continue in G, U/D in H).

enum class GrayConstructor : std::uint8_t { lr, u, fin, d };

class GrayG;
class GrayH;

namespace detail {

struct GrayNode;
using GrayCell = LazyCell<GrayNode>;

struct GrayNode {
  GrayConstructor kind;
  ProperDigit sign = ProperDigit::plus_one();  // unused for U and D
  std::shared_ptr<GrayCell> rest;
};

inline std::shared_ptr<GrayCell> take_successor(GrayNode& node) { return std::move(node.rest); }

}  // namespace detail

class GrayG {
 public:
  static GrayG lr(ProperDigit sign, GrayG rest);
  static GrayG u(GrayH rest);
  template <class F>
  static GrayG defer(F make);

  /// Forces the outermost constructor.
  GrayConstructor kind() const { return cell_->force().kind; }
  bool is_lr() const { return kind() == GrayConstructor::lr; }
  ProperDigit sign() const { return cell_->force().sign; }
  /// Continuation of an Lr node.
  GrayG lr_rest() const;
  /// Continuation of a U node.
  GrayH u_rest() const;

  bool forced() const { return cell_->forced(); }

 private:
  friend class GrayH;
  template <class S, class T, class StepG, class StepH>
  friend struct GrayCorec;

  explicit GrayG(std::shared_ptr<detail::GrayCell> cell) : cell_(std::move(cell)) {}

  std::shared_ptr<detail::GrayCell> cell_;
};

class GrayH {
 public:
  static GrayH fin(ProperDigit sign, GrayG rest);
  static GrayH d(GrayH rest);
  template <class F>
  static GrayH defer(F make);

  GrayConstructor kind() const { return cell_->force().kind; }
  bool is_fin() const { return kind() == GrayConstructor::fin; }
  ProperDigit sign() const { return cell_->force().sign; }
  /// Continuation of a Fin node.
  GrayG fin_rest() const { return GrayG(cell_->force().rest); }
  /// Continuation of a D node.
  GrayH d_rest() const { return GrayH(cell_->force().rest); }

  bool forced() const { return cell_->forced(); }

 private:
  friend class GrayG;
  template <class S, class T, class StepG, class StepH>
  friend struct GrayCorec;

  explicit GrayH(std::shared_ptr<detail::GrayCell> cell) : cell_(std::move(cell)) {}

  std::shared_ptr<detail::GrayCell> cell_;
};

inline GrayG GrayG::lr(ProperDigit sign, GrayG rest) {
  return GrayG(std::make_shared<detail::GrayCell>(
      detail::GrayNode{GrayConstructor::lr, sign, std::move(rest.cell_)}));
}

inline GrayG GrayG::u(GrayH rest) {
  return GrayG(std::make_shared<detail::GrayCell>(
      detail::GrayNode{GrayConstructor::u, ProperDigit::plus_one(), std::move(rest.cell_)}));
}

inline GrayH GrayH::fin(ProperDigit sign, GrayG rest) {
  return GrayH(std::make_shared<detail::GrayCell>(
      detail::GrayNode{GrayConstructor::fin, sign, std::move(rest.cell_)}));
}

inline GrayH GrayH::d(GrayH rest) {
  return GrayH(std::make_shared<detail::GrayCell>(
      detail::GrayNode{GrayConstructor::d, ProperDigit::plus_one(), std::move(rest.cell_)}));
}

inline GrayG GrayG::lr_rest() const { return GrayG(cell_->force().rest); }
inline GrayH GrayG::u_rest() const { return GrayH(cell_->force().rest); }

template <class F>
GrayG GrayG::defer(F make) {
  return GrayG(std::make_shared<detail::GrayCell>(
      [make = std::move(make)]() -> detail::GrayNode { return make().cell_->force(); }));
}

template <class F>
GrayH GrayH::defer(F make) {
  return GrayH(std::make_shared<detail::GrayCell>(
      [make = std::move(make)]() -> detail::GrayNode { return make().cell_->force(); }));
}

// Step results shared by both modes. In mode G, EmitSigned produces Lr and
// EmitDelay produces U; in mode H they produce Fin and D. Either way the
// continuation is a mode-G code (or G-seed) after a signed constructor and a
// mode-H code (or H-seed) after a delay.
template <class S>
struct EmitSigned {
  ProperDigit sign;
  std::variant<GrayG, S> next;
};

template <class T>
struct EmitDelay {
  std::variant<GrayH, T> next;
};

template <class S, class T>
using GrayStep = std::variant<EmitSigned<S>, EmitDelay<T>>;

template <class S, class T, class StepG, class StepH>
struct GrayCorec {
  struct Steps {
    StepG g;
    StepH h;
  };
  using SharedSteps = std::shared_ptr<const Steps>;

  static detail::GrayNode build(const GrayStep<S, T>& r, bool mode_h, const SharedSteps& steps) {
    if (auto* sig = std::get_if<EmitSigned<S>>(&r)) {
      const GrayConstructor kind = mode_h ? GrayConstructor::fin : GrayConstructor::lr;
      if (auto* done = std::get_if<GrayG>(&sig->next)) return {kind, sig->sign, done->cell_};
      return {kind, sig->sign, corec_g(std::get<S>(sig->next), steps).cell_};
    }
    const auto& del = std::get<EmitDelay<T>>(r);
    const GrayConstructor kind = mode_h ? GrayConstructor::d : GrayConstructor::u;
    if (auto* done = std::get_if<GrayH>(&del.next)) return {kind, ProperDigit::plus_one(), done->cell_};
    return {kind, ProperDigit::plus_one(), corec_h(std::get<T>(del.next), steps).cell_};
  }

  static GrayG corec_g(S seed, SharedSteps steps) {
    return GrayG(std::make_shared<detail::GrayCell>(
        [seed = std::move(seed), steps = std::move(steps)]() { return build(steps->g(seed), false, steps); }));
  }

  static GrayH corec_h(T seed, SharedSteps steps) {
    return GrayH(std::make_shared<detail::GrayCell>(
        [seed = std::move(seed), steps = std::move(steps)]() { return build(steps->h(seed), true, steps); }));
  }
};

/// Simultaneous corecursion, mode-G entry point. step_g: S -> GrayStep<S,T>,
/// step_h: T -> GrayStep<S,T>.
template <class S, class T, class StepG, class StepH>
GrayG unfold_gray_g(S seed, StepG step_g, StepH step_h) {
  using C = GrayCorec<S, T, StepG, StepH>;
  auto steps = std::make_shared<const typename C::Steps>(typename C::Steps{std::move(step_g), std::move(step_h)});
  return C::corec_g(std::move(seed), std::move(steps));
}

/// Simultaneous corecursion, mode-H entry point.
template <class S, class T, class StepG, class StepH>
GrayH unfold_gray_h(T seed, StepG step_g, StepH step_h) {
  using C = GrayCorec<S, T, StepG, StepH>;
  auto steps = std::make_shared<const typename C::Steps>(typename C::Steps{std::move(step_g), std::move(step_h)});
  return C::corec_h(std::move(seed), std::move(steps));
}

/// Wire tokens: R/L are Lr with sign +1/-1, Fr/Fl are Fin with sign +1/-1.
enum class GrayToken : std::uint8_t { r, l, u, fr, fl, d };

/// First n constructors, following the mode changes; forces exactly n cells.
std::vector<GrayToken> take_gray_prefix(GrayG g, std::size_t n);

struct CountedGray {
  GrayG code;
  ForceCounter counter;
};

/// Mirrors g constructor for constructor (in both modes), counting forces.
CountedGray with_counter(GrayG g);

}  // namespace exact

#endif  // EXACT_GRAY_HPP
