#include "rng.hpp"

#include <cmath>
#include <numbers>

namespace oy {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> c = counter;
    std::uint32_t k0 = key[0];
    std::uint32_t k1 = key[1];
    for (int round = 0; round < 10; ++round) {
        philox_round(c, k0, k1);
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return c;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t sample_index,
                     std::uint32_t level, std::uint32_t lane) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ sample_index);
    h = mix64(h ^ ((static_cast<std::uint64_t>(level) << 32) | lane));
    key_ = {static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    const std::uint64_t s = mix64(h ^ 0xDA3E39CB94B95BDBull);
    salt_ = {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
}

void RngStream::refill() {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
        salt_[0], salt_[1]};
    const auto out = philox4x32(ctr, key_);
    buf_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    buf_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    buf_pos_ = 0;
    ++block_;
}

std::uint64_t RngStream::next_u64() {
    if (buf_pos_ >= 2) refill();
    return buf_[buf_pos_++];
}

double RngStream::next_unit() {
    // 53 mantissa bits; +1 keeps the result strictly positive for log().
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = r * std::sin(a);
    has_cached_gaussian_ = true;
    return r * std::cos(a);
}

}  // namespace oy
