// Copyright 2026 The Photocomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photocomp/effects.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace photocomp {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Runs `fn(r, g, b, a)` on every pixel in place.
template <class Fn>
RasterImage map_pixels(const RasterImage& image, Fn fn) {
  RasterImage out = image;
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); i += 4) {
    fn(px[i], px[i + 1], px[i + 2], px[i + 3]);
  }
  return out;
}

std::uint8_t quantize_unit(double v) {
  return clamp_channel(round_half_up(v * 255.0));
}

struct Hsl {
  double h;  // [0, 360)
  double s;  // [0, 1]
  double l;  // [0, 1]
};

Hsl rgb_to_hsl(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
  const double r = r8 / 255.0;
  const double g = g8 / 255.0;
  const double b = b8 / 255.0;
  const double hi = std::max({r, g, b});
  const double lo = std::min({r, g, b});
  const double l = (hi + lo) / 2.0;
  if (hi == lo) return {0.0, 0.0, l};
  const double d = hi - lo;
  const double s = l > 0.5 ? d / (2.0 - hi - lo) : d / (hi + lo);
  double h;
  if (hi == r) {
    h = (g - b) / d + (g < b ? 6.0 : 0.0);
  } else if (hi == g) {
    h = (b - r) / d + 2.0;
  } else {
    h = (r - g) / d + 4.0;
  }
  return {h * 60.0, s, l};
}

void hsl_to_rgb(const Hsl& c, std::uint8_t& r, std::uint8_t& g,
                std::uint8_t& b) {
  const double chroma = (1.0 - std::fabs(2.0 * c.l - 1.0)) * c.s;
  const double hp = c.h / 60.0;
  const double x = chroma * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r1 = 0, g1 = 0, b1 = 0;
  if (hp < 1) {
    r1 = chroma, g1 = x;
  } else if (hp < 2) {
    r1 = x, g1 = chroma;
  } else if (hp < 3) {
    g1 = chroma, b1 = x;
  } else if (hp < 4) {
    g1 = x, b1 = chroma;
  } else if (hp < 5) {
    r1 = x, b1 = chroma;
  } else {
    r1 = chroma, b1 = x;
  }
  const double m = c.l - chroma / 2.0;
  r = quantize_unit(r1 + m);
  g = quantize_unit(g1 + m);
  b = quantize_unit(b1 + m);
}

double wrap_degrees(double d) {
  double w = std::fmod(d, 360.0);
  if (w < 0) w += 360.0;
  return w >= 360.0 ? 0.0 : w;
}

std::uint8_t sepia_channel(int r, int g, int b, int wr, int wg, int wb) {
  return clamp_channel((wr * r + wg * g + wb * b + 500) / 1000);
}

RasterImage flip(const RasterImage& image, bool horizontal) {
  RasterImage out(image.width(), image.height());
  const int w = image.width();
  const int h = image.height();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.set(x, y, horizontal ? image.at(w - 1 - x, y) : image.at(x, h - 1 - y));
    }
  }
  return out;
}

RasterImage add_border(const RasterImage& image, const fx::Border& border) {
  if (border.width == 0) return image;
  const int bw = border.width;
  RasterImage out(image.width() + 2 * bw, image.height() + 2 * bw, border.color);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      out.set(x + bw, y + bw, image.at(x, y));
    }
  }
  return out;
}

RasterImage remove_red_eye(const RasterImage& image, const fx::RedEye& spec) {
  RasterImage out = image;
  const Rect region = intersect(spec.region, Rect{0, 0, image.width(), image.height()});
  for (int y = region.y; y < region.bottom(); ++y) {
    for (int x = region.x; x < region.right(); ++x) {
      Rgba c = out.at(x, y);
      // R > 1.5 * max(G, B), kept in integers.
      if (2 * c.r > 3 * std::max(c.g, c.b)) {
        c.r = static_cast<std::uint8_t>((c.g + c.b + 1) / 2);
        out.set(x, y, c);
      }
    }
  }
  return out;
}

}  // namespace

RasterImage convolve3x3(const RasterImage& image, const Kernel3x3& kernel) {
  if (kernel.divisor == 0.0) {
    throw EffectParamError("kernel divisor must be non-zero");
  }
  const int w = image.width();
  const int h = image.height();
  const auto src = image.pixels();
  RasterImage out(w, h);
  auto dst = out.pixels();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[3] = {0, 0, 0};
      for (int ky = 0; ky < 3; ++ky) {
        const int sy = std::clamp(y + ky - 1, 0, h - 1);
        for (int kx = 0; kx < 3; ++kx) {
          const double wgt = kernel.weights[ky * 3 + kx];
          if (wgt == 0.0) continue;
          const int sx = std::clamp(x + kx - 1, 0, w - 1);
          const std::size_t o = (static_cast<std::size_t>(sy) * w + sx) * 4;
          acc[0] += wgt * src[o];
          acc[1] += wgt * src[o + 1];
          acc[2] += wgt * src[o + 2];
        }
      }
      const std::size_t o = (static_cast<std::size_t>(y) * w + x) * 4;
      for (int c = 0; c < 3; ++c) {
        dst[o + c] =
            clamp_channel(round_half_up(acc[c] / kernel.divisor + kernel.bias));
      }
      dst[o + 3] = src[o + 3];
    }
  }
  return out;
}

RasterImage apply_effect(const RasterImage& image, const EffectSpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [&](const fx::Grayscale&) {
            return map_pixels(image, [](auto& r, auto& g, auto& b, auto&) {
              r = g = b = luma(r, g, b);
            });
          },
          [&](const fx::Desaturate&) {
            return map_pixels(image, [](auto& r, auto& g, auto& b, auto&) {
              r = g = b = luma(r, g, b);
            });
          },
          [&](const fx::Invert&) {
            return map_pixels(image, [](auto& r, auto& g, auto& b, auto&) {
              r = 255 - r;
              g = 255 - g;
              b = 255 - b;
            });
          },
          [&](const fx::Sepia&) {
            return map_pixels(image, [](auto& r, auto& g, auto& b, auto&) {
              const int r0 = r, g0 = g, b0 = b;
              r = sepia_channel(r0, g0, b0, 393, 769, 189);
              g = sepia_channel(r0, g0, b0, 349, 686, 168);
              b = sepia_channel(r0, g0, b0, 272, 534, 131);
            });
          },
          [&](const fx::Brightness& p) {
            return map_pixels(image, [d = p.delta](auto& r, auto& g, auto& b,
                                                   auto&) {
              r = clamp_channel(r + d);
              g = clamp_channel(g + d);
              b = clamp_channel(b + d);
            });
          },
          [&](const fx::Contrast& p) {
            return map_pixels(image, [f = p.factor](auto& r, auto& g, auto& b,
                                                    auto&) {
              const auto adjust = [f](std::uint8_t c) {
                return clamp_channel(round_half_up((c - 128.0) * f + 128.0));
              };
              r = adjust(r);
              g = adjust(g);
              b = adjust(b);
            });
          },
          [&](const fx::Hue& p) {
            const double shift = p.degrees;
            return map_pixels(image, [shift](auto& r, auto& g, auto& b, auto&) {
              Hsl c = rgb_to_hsl(r, g, b);
              c.h = wrap_degrees(c.h + shift);
              hsl_to_rgb(c, r, g, b);
            });
          },
          [&](const fx::Saturate& p) {
            return map_pixels(image, [f = p.factor](auto& r, auto& g, auto& b,
                                                    auto&) {
              Hsl c = rgb_to_hsl(r, g, b);
              c.s = std::min(1.0, c.s * f);
              hsl_to_rgb(c, r, g, b);
            });
          },
          [&](const fx::BlackWhite& p) {
            return map_pixels(image, [t = p.threshold](auto& r, auto& g,
                                                       auto& b, auto&) {
              r = g = b = luma(r, g, b) >= t ? 255 : 0;
            });
          },
          [&](const fx::Opacity& p) {
            return map_pixels(image, [alpha = p.alpha](auto&, auto&, auto&,
                                                       auto& a) {
              a = clamp_channel(round_half_up(a * alpha));
            });
          },
          [&](const fx::Blur&) {
            return convolve3x3(image, Kernel3x3::box_blur());
          },
          [&](const fx::Sharpen&) {
            return convolve3x3(image, Kernel3x3::sharpen());
          },
          [&](const fx::Emboss&) {
            return convolve3x3(image, Kernel3x3::emboss());
          },
          [&](const fx::FlipH&) { return flip(image, true); },
          [&](const fx::FlipV&) { return flip(image, false); },
          [&](const fx::Border& p) { return add_border(image, p); },
          [&](const fx::RedEye& p) { return remove_red_eye(image, p); },
      },
      spec);
}

RasterImage apply_chain(const RasterImage& image,
                        std::span<const EffectSpec> chain) {
  RasterImage current = image;
  for (const EffectSpec& spec : chain) current = apply_effect(current, spec);
  return current;
}

std::int64_t chain_work_pixels(Size input, std::span<const EffectSpec> chain) {
  std::int64_t total = 0;
  Size s = input;
  for (const EffectSpec& spec : chain) {
    total += s.area();
    s = effect_output_size(spec, s);
  }
  return total;
}

Size chain_output_size(Size input, std::span<const EffectSpec> chain) {
  Size s = input;
  for (const EffectSpec& spec : chain) s = effect_output_size(spec, s);
  return s;
}

}  // namespace photocomp
