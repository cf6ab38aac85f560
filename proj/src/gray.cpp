#include "exact/gray.hpp"

#include <optional>

namespace exact {

std::vector<GrayToken> take_gray_prefix(GrayG g, std::size_t n) {
  std::vector<GrayToken> out;
  out.reserve(n);
  std::optional<GrayH> h;  // engaged while walking mode H
  bool in_h = false;
  for (std::size_t i = 0; i < n; ++i) {
    const bool last = i + 1 == n;
    if (!in_h) {
      if (g.is_lr()) {
        out.push_back(g.sign().positive() ? GrayToken::r : GrayToken::l);
        if (!last) g = g.lr_rest();
      } else {
        out.push_back(GrayToken::u);
        if (!last) h = g.u_rest();
        in_h = true;
      }
    } else {
      if (h->is_fin()) {
        out.push_back(h->sign().positive() ? GrayToken::fr : GrayToken::fl);
        if (!last) g = h->fin_rest();
        in_h = false;
      } else {
        out.push_back(GrayToken::d);
        if (!last) h = h->d_rest();
      }
    }
  }
  return out;
}

namespace {

struct SourceG {
  GrayG rest;
};
struct SourceH {
  GrayH rest;
};

using MirrorStep = GrayStep<SourceG, SourceH>;

}  // namespace

CountedGray with_counter(GrayG g) {
  ForceCounter counter;
  auto step_g = [counter](const SourceG& s) -> MirrorStep {
    counter.bump();
    if (s.rest.is_lr()) return EmitSigned<SourceG>{s.rest.sign(), SourceG{s.rest.lr_rest()}};
    return EmitDelay<SourceH>{SourceH{s.rest.u_rest()}};
  };
  auto step_h = [counter](const SourceH& s) -> MirrorStep {
    counter.bump();
    if (s.rest.is_fin()) return EmitSigned<SourceG>{s.rest.sign(), SourceG{s.rest.fin_rest()}};
    return EmitDelay<SourceH>{SourceH{s.rest.d_rest()}};
  };
  GrayG wrapped = unfold_gray_g<SourceG, SourceH>(SourceG{std::move(g)}, step_g, step_h);
  return {std::move(wrapped), counter};
}

}  // namespace exact
