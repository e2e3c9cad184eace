#include "rsbench/rng.hpp"

namespace rsbench {

namespace {

// 128-layer ziggurat tables for the standard normal, following Marsaglia &
// Tsang (2000) but scaled to a 53-bit mantissa. kR is the right edge of the
// base strip and kV the common strip area.
struct ZigguratTables {
  std::int64_t kn[128];
  double wn[128];
  double fn[128];

  ZigguratTables() {
    // Mantissa is 52 magnitude bits plus sign, so the integer scale is 2^52.
    constexpr double m1 = 4503599627370496.0;  // 2^52
    const double r = 3.442619855899;
    const double v = 9.91256303526217e-3;
    double dn = r, tn = r;
    double q = v / std::exp(-0.5 * dn * dn);
    kn[0] = std::int64_t((dn / q) * m1);
    kn[1] = 0;
    wn[0] = q / m1;
    wn[127] = dn / m1;
    fn[0] = 1.0;
    fn[127] = std::exp(-0.5 * dn * dn);
    for (int i = 126; i >= 1; --i) {
      dn = std::sqrt(-2.0 * std::log(v / dn + std::exp(-0.5 * dn * dn)));
      kn[i + 1] = std::int64_t((dn / tn) * m1);
      tn = dn;
      fn[i] = std::exp(-0.5 * dn * dn);
      wn[i] = dn / m1;
    }
  }
};

const ZigguratTables kZig;

constexpr double kTailR = 3.442619855899;

}  // namespace

double RngStream::normal_fast() {
  for (;;) {
    std::uint64_t u = next_u64();
    // Signed 53-bit value in [-2^52, 2^52); the layer index reuses the low
    // bits that the mantissa shift discards.
    std::int64_t hz = std::int64_t(u >> 11) - (std::int64_t(1) << 52);
    int iz = int(u & 127);
    std::int64_t ahz = hz < 0 ? -hz : hz;
    if (ahz < kZig.kn[iz]) return double(hz) * kZig.wn[iz];

    if (iz == 0) {
      // Base strip: sample the tail beyond kTailR by inversion-rejection.
      double x, y;
      do {
        double u1 = double((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double u2 = double((next_u64() >> 11) + 1) * 0x1.0p-53;
        x = -std::log(u1) / kTailR;
        y = -std::log(u2);
      } while (y + y < x * x);
      return hz > 0 ? kTailR + x : -(kTailR + x);
    }

    double x = double(hz) * kZig.wn[iz];
    double u2 = double(next_u64() >> 11) * 0x1.0p-53;
    if (kZig.fn[iz] + u2 * (kZig.fn[iz - 1] - kZig.fn[iz]) <
        std::exp(-0.5 * x * x))
      return x;
    // Rejected against the strip cap: retry from scratch.
  }
}

}  // namespace rsbench
