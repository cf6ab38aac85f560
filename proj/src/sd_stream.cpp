#include "exact/sd_stream.hpp"

namespace exact {

std::vector<SignedDigit> take_prefix(SdStream u, std::size_t n) {
  std::vector<SignedDigit> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(u.head());
    if (i + 1 < n) u = u.tail();
  }
  return out;
}

namespace {

struct Source {
  SdStream rest;
};

}  // namespace

CountedSd with_counter(SdStream u) {
  ForceCounter counter;
  SdStream wrapped = unfold_sd(Source{std::move(u)}, [counter](const Source& s) {
    counter.bump();
    return SdStep<Source>{s.rest.head(), Source{s.rest.tail()}};
  });
  return {std::move(wrapped), counter};
}

}  // namespace exact
